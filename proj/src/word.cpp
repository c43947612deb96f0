#include "twobridge/word.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace twobridge {

Word::Word(std::vector<Syllable> syllables) {
        for (const auto &s : syllables) {
                if (s.letter != 'R' && s.letter != 'L')
                        throw std::invalid_argument(std::string("bad letter '") + s.letter + "'");
                if (s.exponent < 1)
                        throw std::invalid_argument("exponents must be positive");
                if (!syl_.empty() && syl_.back().letter == s.letter)
                        syl_.back().exponent += s.exponent;
                else
                        syl_.push_back(s);
        }
}

Word Word::from_letters(const std::string &letters) {
        std::vector<Syllable> s;
        for (char c : letters)
                s.push_back({c, 1});
        return Word(std::move(s));
}

int Word::ell() const {
        int sum = 0;
        for (const auto &s : syl_)
                sum += s.exponent;
        return sum;
}

std::string Word::letters() const {
        std::string out;
        for (const auto &s : syl_)
                out.append(std::size_t(s.exponent), s.letter);
        return out;
}

std::vector<int> Word::exponents() const {
        std::vector<int> e;
        for (const auto &s : syl_)
                e.push_back(s.exponent);
        return e;
}

Word parse_word(const std::string &text) {
        if (text.empty())
                throw std::invalid_argument("empty word");
        std::vector<Syllable> out;
        std::size_t i = 0;
        while (i < text.size()) {
                char c = text[i];
                if (c != 'R' && c != 'L')
                        throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
                ++i;
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                        ++i;
                        std::size_t j = i;
                        while (j < text.size() && std::isdigit((unsigned char)text[j]))
                                ++j;
                        if (j == i)
                                throw std::invalid_argument("missing exponent after '^'");
                        if (j - i > 6)
                                throw std::invalid_argument("exponent too large");
                        e = std::stoi(text.substr(i, j - i));
                        if (e == 0)
                                throw std::invalid_argument("zero exponent");
                        i = j;
                }
                out.push_back({c, e});
        }
        return Word(std::move(out));
}

std::string render(const Word &w) {
        std::string s;
        for (const auto &x : w.syllables()) {
                s += x.letter;
                if (x.exponent >= 2)
                        s += "^" + std::to_string(x.exponent);
        }
        return s;
}

Word normalize(const Word &w) {
        if (w.empty() || w.syllables().front().letter == 'R')
                return w;
        std::vector<Syllable> s = w.syllables();
        for (auto &x : s)
                x.letter = x.letter == 'R' ? 'L' : 'R';
        return Word(std::move(s));
}

bool is_hyperbolic(const Word &w) { return w.n() >= 2; }

Word inner_word(const Word &w) {
        std::string l = w.letters();
        if (l.size() < 3)
                throw std::invalid_argument("word too short to have an inner word");
        return Word::from_letters(l.substr(1, l.size() - 2));
}

Word family_word(const std::vector<int> &a) {
        std::vector<Syllable> s{{'R', 1}};
        for (std::size_t i = 0; i < a.size(); ++i)
                s.push_back({i % 2 == 0 ? 'L' : 'R', a[i]});
        // Terminal letter differs from the last syllable's letter.
        s.push_back({a.size() % 2 == 1 ? 'R' : 'L', 1});
        return Word(std::move(s));
}

std::vector<Word> enumerate_words(int max_inner, const std::set<int> &exps, std::optional<int> fixed_C) {
        if (exps.empty())
                throw std::invalid_argument("empty exponent set");
        if (max_inner < 1)
                throw std::invalid_argument("max_inner_syllables must be >= 1");
        std::vector<int> choice(exps.begin(), exps.end());
        std::vector<Word> out;
        for (int n = 1; n <= max_inner; ++n) {
                std::vector<int> idx(n, 0);
                while (true) {
                        std::vector<int> a(n);
                        for (int i = 0; i < n; ++i)
                                a[i] = choice[idx[i]];
                        int sum = std::accumulate(a.begin(), a.end(), 0);
                        if (!fixed_C || sum - n == *fixed_C)
                                out.push_back(family_word(a));
                        int k = n - 1;
                        while (k >= 0 && idx[k] + 1 == int(choice.size()))
                                idx[k--] = 0;
                        if (k < 0)
                                break;
                        ++idx[k];
                }
        }
        return out;
}

std::vector<Word> all_hyperbolic_words(int max_len) {
        std::vector<Word> out;
        for (int len = 2; len <= max_len; ++len)
                for (unsigned bits = 0; bits < (1u << len); ++bits) {
                        std::string s(std::size_t(len), 'R');
                        for (int i = 0; i < len; ++i)
                                if (bits >> (len - 1 - i) & 1)
                                        s[std::size_t(i)] = 'L';
                        Word w = Word::from_letters(s);
                        if (is_hyperbolic(w))
                                out.push_back(w);
                }
        return out;
}

} // namespace twobridge
