#include "twobridge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twobridge {

int Perm4::ordered_index() const {
        // Lehmer code.
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
                int smaller = 0;
                for (int j = i + 1; j < 4; ++j)
                        smaller += img_[j] < img_[i];
                static constexpr int fact[4] = {6, 2, 1, 1};
                idx += smaller * fact[i];
        }
        return idx;
}

Perm4 Perm4::from_ordered_index(int idx) {
        if (idx < 0 || idx >= 24)
                throw std::out_of_range("permutation index out of range");
        std::array<int, 4> v{};
        std::iota(v.begin(), v.end(), 0);
        for (int i = 0; i < idx; ++i)
                std::next_permutation(v.begin(), v.end());
        return Perm4(v[0], v[1], v[2], v[3]);
}

bool Perm4::valid() const {
        unsigned seen = 0;
        for (auto x : img_) {
                if (x > 3)
                        return false;
                seen |= 1u << x;
        }
        return seen == 0xf;
}

std::string Perm4::str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i)
                s[i] = char('0' + img_[i]);
        return s;
}

Perm4 Perm4::parse(const std::string &s) {
        if (s.size() != 4)
                throw std::invalid_argument("permutation must have 4 digits: " + s);
        Perm4 p(s[0] - '0', s[1] - '0', s[2] - '0', s[3] - '0');
        if (!p.valid())
                throw std::invalid_argument("not a permutation of 0123: " + s);
        return p;
}

} // namespace twobridge
