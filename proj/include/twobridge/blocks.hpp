#pragma once

#include <string>
#include <vector>

#include "twobridge/word.hpp"

namespace twobridge {

enum class BlockKind { B1, B2_start, B2_end, B3, UnfinishedB3, AllB2 };
const char *block_kind_name(BlockKind k);

// Spans are inclusive syllable indices into the inner word.
//  B1:            a run of single letters; length 2m+p.
//  B2_start/end,
//  AllB2:         a run of squared letters; length 2m+p, k = length.
//  B3:            k runs of squares, each preceded and followed by one single
//                 letter; runs[i] is the length of run i, m = total squares.
//  UnfinishedB3:  a B3 that stops at the end of the word right after a square.
struct Block {
        BlockKind kind;
        int start, end;
        int m = 0, p = 0, k = 0;
        std::vector<int> runs;
        int length() const { return end - start + 1; }
        bool operator==(const Block &) const = default;
};

struct BlockDecomposition {
        std::vector<Block> blocks;
        bool ends_with_unfinished_B3 = false;
        bool is_all_B2 = false;
};

// Inner word exponents must all be 1 or 2.
BlockDecomposition decompose(const Word &inner);
BlockDecomposition decompose(const std::vector<int> &exponents);

// Inner-letter offset of each syllable (prefix sums of the exponents).
std::vector<int> syllable_offsets(const std::vector<int> &exponents);

} // namespace twobridge
