#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace twobridge {

// Permutation of the vertex labels {0,1,2,3}; p[i] is the image of i.
class Perm4 {
public:
        constexpr Perm4() : img_{0, 1, 2, 3} {}
        constexpr Perm4(int a, int b, int c, int d)
            : img_{std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(d)} {}

        static constexpr Perm4 transposition(int a, int b) {
                Perm4 p;
                p.img_[a] = std::uint8_t(b);
                p.img_[b] = std::uint8_t(a);
                return p;
        }

        constexpr int operator[](int i) const { return img_[i]; }

        // (p * q)(i) = p(q(i))
        constexpr Perm4 operator*(const Perm4 &q) const {
                return Perm4(img_[q[0]], img_[q[1]], img_[q[2]], img_[q[3]]);
        }

        constexpr Perm4 inverse() const {
                Perm4 r;
                for (int i = 0; i < 4; ++i)
                        r.img_[img_[i]] = std::uint8_t(i);
                return r;
        }

        constexpr bool operator==(const Perm4 &) const = default;

        // Rank in the lexicographic ordering of S4 (0123 -> 0, ..., 3210 -> 23).
        int ordered_index() const;
        static Perm4 from_ordered_index(int idx);

        bool valid() const;
        std::string str() const;                  // "0123"
        static Perm4 parse(const std::string &s); // inverse of str(); throws

private:
        std::array<std::uint8_t, 4> img_;
};

} // namespace twobridge
