#include <benchmark/benchmark.h>

#include "twobridge/isosig.hpp"
#include "twobridge/survey.hpp"

using namespace twobridge;

namespace {

Triangulation long_word(int ell) {
        std::string s;
        for (int i = 0; i < ell; ++i)
                s += (i / 2) % 2 ? 'L' : 'R';
        return build_sakuma_weeks(Word::from_letters(s));
}

void BM_isosig_serial(benchmark::State &st) {
        auto t = long_word(int(st.range(0)));
        for (auto _ : st)
                benchmark::DoNotOptimize(encode_isosig_serial(t));
        st.counters["tets"] = t.size();
}

void BM_isosig_parallel(benchmark::State &st) {
        auto t = long_word(int(st.range(0)));
        for (auto _ : st)
                benchmark::DoNotOptimize(encode_isosig(t));
        st.counters["tets"] = t.size();
}

void BM_survey_serial(benchmark::State &st) {
        auto words = enumerate_words(int(st.range(0)), {1, 2});
        for (auto _ : st)
                benchmark::DoNotOptimize(survey_serial(words, true));
        st.counters["words"] = double(words.size());
}

void BM_survey_parallel(benchmark::State &st) {
        auto words = enumerate_words(int(st.range(0)), {1, 2});
        for (auto _ : st)
                benchmark::DoNotOptimize(survey(words, true));
        st.counters["words"] = double(words.size());
}

}

BENCHMARK(BM_isosig_serial)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isosig_parallel)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_survey_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_survey_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
