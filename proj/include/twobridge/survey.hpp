#pragma once

#include <vector>

#include "twobridge/volume.hpp"

namespace twobridge {

// Bounds for many words; rows come back in input order whatever the
// scheduling. Runs in parallel over words.
std::vector<BoundsReport> survey(const std::vector<Word> &words, bool maximize = true,
                                 const MaximizeOptions &opt = {});
std::vector<BoundsReport> survey_serial(const std::vector<Word> &words, bool maximize = true,
                                        const MaximizeOptions &opt = {});

// Caps OpenMP threads at TWOBRIDGE_THREADS when that is set to a positive
// integer. Returns the cap in effect (0: none).
int apply_thread_cap();

} // namespace twobridge
