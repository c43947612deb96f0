#include "twobridge/blocks.hpp"

#include <stdexcept>

namespace twobridge {

const char *block_kind_name(BlockKind k) {
        switch (k) {
        case BlockKind::B1: return "B1";
        case BlockKind::B2_start: return "B2_start";
        case BlockKind::B2_end: return "B2_end";
        case BlockKind::B3: return "B3";
        case BlockKind::UnfinishedB3: return "UnfinishedB3";
        case BlockKind::AllB2: return "AllB2";
        }
        return "?";
}

std::vector<int> syllable_offsets(const std::vector<int> &a) {
        std::vector<int> off(a.size());
        int pos = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
                off[i] = pos;
                pos += a[i];
        }
        return off;
}

BlockDecomposition decompose(const Word &inner) { return decompose(inner.exponents()); }

namespace {

Block square_run(BlockKind kind, int s, int e) {
        Block b{kind, s, e, 0, 0, 0, {}};
        b.k = e - s + 1;
        b.m = b.k / 2;
        b.p = b.k % 2;
        return b;
}

} // namespace

BlockDecomposition decompose(const std::vector<int> &a) {
        int n = int(a.size());
        if (n == 0)
                throw std::invalid_argument("empty inner word");
        for (int x : a)
                if (x != 1 && x != 2)
                        throw std::invalid_argument("inner exponents must be 1 or 2");
        BlockDecomposition d;
        int lead = 0, trail = 0;
        while (lead < n && a[std::size_t(lead)] == 2)
                ++lead;
        if (lead == n) {
                d.is_all_B2 = true;
                d.blocks.push_back(square_run(BlockKind::AllB2, 0, n - 1));
                return d;
        }
        while (a[std::size_t(n - 1 - trail)] == 2)
                ++trail;
        bool end_b2 = trail >= 2;
        // trail == 1 means a_{n-1} = 1, a_n = 2: the last B3 has no closing letter.
        d.ends_with_unfinished_B3 = trail == 1;

        int hi = n - (end_b2 ? trail : 0);
        // Squares one single letter apart belong to the same B3.
        std::vector<std::vector<int>> groups;
        for (int s = lead; s < hi; ++s) {
                if (a[std::size_t(s)] != 2)
                        continue;
                if (!groups.empty() && (s == groups.back().back() + 1 || s == groups.back().back() + 2))
                        groups.back().push_back(s);
                else
                        groups.push_back({s});
        }

        std::vector<Block> mid;
        for (const auto &g : groups) {
                Block b{BlockKind::B3, g.front() - 1, g.back() + 1, 0, 0, 0, {}};
                for (std::size_t i = 0; i < g.size(); ++i) {
                        if (i > 0 && g[i] == g[i - 1] + 1)
                                ++b.runs.back();
                        else
                                b.runs.push_back(1);
                }
                b.k = int(b.runs.size());
                b.m = int(g.size());
                if (g.back() == n - 1) {
                        b.kind = BlockKind::UnfinishedB3;
                        b.end = n - 1;
                }
                mid.push_back(b);
        }

        if (lead > 0)
                d.blocks.push_back(square_run(BlockKind::B2_start, 0, lead - 1));
        // Singles not taken by a B3 form maximal B1 runs.
        int pos = lead;
        auto flush_b1 = [&](int upto) {
                if (pos <= upto) {
                        Block b{BlockKind::B1, pos, upto, 0, 0, 0, {}};
                        b.m = b.length() / 2;
                        b.p = b.length() % 2;
                        d.blocks.push_back(b);
                }
        };
        for (const auto &b : mid) {
                flush_b1(b.start - 1);
                d.blocks.push_back(b);
                pos = b.end + 1;
        }
        flush_b1(hi - 1);
        if (end_b2)
                d.blocks.push_back(square_run(BlockKind::B2_end, hi, n - 1));
        return d;
}

} // namespace twobridge
