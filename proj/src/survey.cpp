#include "twobridge/survey.hpp"

#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twobridge {

std::vector<BoundsReport> survey_serial(const std::vector<Word> &words, bool maximize, const MaximizeOptions &opt) {
        std::vector<BoundsReport> out;
        out.reserve(words.size());
        for (const auto &w : words)
                out.push_back(bounds_report(w, maximize, opt));
        return out;
}

std::vector<BoundsReport> survey(const std::vector<Word> &words, bool maximize, const MaximizeOptions &opt) {
        std::vector<BoundsReport> out(words.size());
        std::exception_ptr err;
        int count = int(words.size());
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
                try {
                        out[std::size_t(i)] = bounds_report(words[std::size_t(i)], maximize, opt);
                } catch (...) {
#pragma omp critical
                        if (!err)
                                err = std::current_exception();
                }
        }
        if (err)
                std::rethrow_exception(err);
        return out;
}

int apply_thread_cap() {
        const char *env = std::getenv("TWOBRIDGE_THREADS");
        if (!env || !*env)
                return 0;
        int cap = 0;
        try {
                cap = std::stoi(env);
        } catch (const std::exception &) {
                return 0;
        }
        if (cap <= 0)
                return 0;
#ifdef _OPENMP
        omp_set_num_threads(cap);
#endif
        return cap;
}

} // namespace twobridge
