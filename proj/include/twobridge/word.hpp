#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace twobridge {

struct Syllable {
        char letter;  // 'R' or 'L'
        int exponent; // >= 1
        bool operator==(const Syllable &) const = default;
};

// A twist word stored as maximal syllables. The full letter sequence is
// authoritative: both the R^{a1}L^{a2}... form and the R.inner.terminal form
// are just ways of reading it.
class Word {
public:
        Word() = default;
        explicit Word(std::vector<Syllable> syllables); // merges equal neighbours; throws on bad input
        static Word from_letters(const std::string &letters);

        const std::vector<Syllable> &syllables() const { return syl_; }
        int n() const { return int(syl_.size()); }
        int ell() const;
        std::string letters() const;
        std::vector<int> exponents() const;
        bool empty() const { return syl_.empty(); }

        bool operator==(const Word &) const = default;
        bool operator<(const Word &o) const { return letters() < o.letters(); }

private:
        std::vector<Syllable> syl_;
};

Word parse_word(const std::string &text);
std::string render(const Word &w); // "R^2LR"
Word normalize(const Word &w);
bool is_hyperbolic(const Word &w);
Word inner_word(const Word &w);

// Every RL^{a1}...(L^{an}R | R^{an}L) with n <= max_inner_syllables and all
// a_i in exponents, optionally restricted to sum(a_i) = n + C. Lexicographic
// order on (n, exponent vector).
std::vector<Word> enumerate_words(int max_inner_syllables, const std::set<int> &exponents,
                                  std::optional<int> fixed_C = std::nullopt);

// Builds the theorem-family word from its inner exponents.
Word family_word(const std::vector<int> &inner_exponents);

// All words of letter length 2..max_len starting with either letter, having
// at least two syllables (the corpus used for the combinatorial lemmas).
std::vector<Word> all_hyperbolic_words(int max_len);

} // namespace twobridge
