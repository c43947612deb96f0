// One line per acceptance criterion. Exit status is 0 when every criterion
// passes or fails in exactly its documented way (see README, "Known
// deviations"); any other outcome, including a known failure that changes
// shape or starts passing, exits 1.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tables.hpp"
#include "twobridge/angles.hpp"
#include "twobridge/isosig.hpp"
#include "twobridge/moves.hpp"
#include "twobridge/survey.hpp"
#include "twobridge/volume.hpp"

using namespace twobridge;
using std::numbers::pi;

namespace {

struct Outcome {
        bool pass;
        std::string detail;
        std::string failure_key; // compared against the known-failure key when !pass
};

struct Criterion {
        int id;
        const char *name;
        std::function<Outcome()> run;
        const char *known_failure = nullptr;
};

std::string fmt(const char *f, double x) {
        char b[64];
        std::snprintf(b, sizeof b, f, x);
        return b;
}

Outcome golden_tables() {
        auto a = encode_isosig(build_sakuma_weeks(parse_word("R^2LR")));
        auto b = encode_isosig(parse_gluing_table(TABLE_R2LR));
        auto c = encode_isosig(build_sakuma_weeks(parse_word("RL^3R")));
        auto d = encode_isosig(parse_gluing_table(TABLE_RL3R));
        bool ok = a == b && c == d;
        return {ok, "R^2LR " + a + (a == b ? " == " : " != ") + b + "; RL^3R " + c + (c == d ? " == " : " != ") + d,
                ""};
}

Outcome golden_signatures() {
        auto s1 = simplify(build_sakuma_weeks(parse_word("R^2LR")));
        auto t = build_sakuma_weeks(parse_word("RL^3R"));
        auto full = simplify(t);
        // The 4-4 the simplifier chose: a degree-4 edge and the axis after
        // which a 3-2 becomes available.
        std::string mid = "(no 4-4)";
        if (!full.moves.empty() && full.moves[0].move == "4-4")
                mid = encode_isosig(move_44(t, full.moves[0].target, full.moves[0].axis));
        auto a = encode_isosig(s1.result), c = encode_isosig(full.result);
        bool ok = a == "fLLQcbcdeeetsfxxh" && s1.result.size() == 5 && mid == "iLLMLQcbcdefhghhmvftgafqa" &&
                  c == "hLLMPkbcdfggfgmvfafwkf" && full.result.size() == 7;
        return {ok, a + ", " + mid + ", " + c, ""};
}

Outcome edge_count() {
        int n = 0, bad = 0;
        for (const auto &w : all_hyperbolic_words(8)) {
                auto t = build_sakuma_weeks(w);
                ++n;
                if (int(edge_classes(t).classes.size()) != t.size())
                        ++bad;
        }
        return {bad == 0, std::to_string(n) + " words, " + std::to_string(bad) + " mismatches", ""};
}

Outcome degree_lemmas() {
        int n = 0;
        std::vector<std::string> bad3, bad4;
        for (const auto &w : all_hyperbolic_words(8)) {
                ++n;
                auto got = degree_predicates(build_sakuma_weeks(w));
                auto want = lemma_degree_predicates(w);
                if (got.has_degree3 != want.has_degree3)
                        bad3.push_back(w.letters());
                if (got.has_degree4 != want.has_degree4)
                        bad4.push_back(w.letters());
        }
        std::sort(bad3.begin(), bad3.end());
        std::sort(bad4.begin(), bad4.end());
        std::ostringstream d, key;
        d << n << " words; degree-3 exceptions " << bad3.size() << ", degree-4 exceptions " << bad4.size();
        key << "d3:";
        for (auto &s : bad3)
                key << s << ' ';
        key << "d4:";
        for (auto &s : bad4)
                key << s << ' ';
        if (!bad4.empty())
                d << " (" << key.str() << ")";
        return {bad3.empty() && bad4.empty(), d.str(), key.str()};
}

Outcome angle_validity() {
        int n = 0, bad = 0;
        for (const auto &w : enumerate_words(6, {1, 2})) {
                ++n;
                auto t = build_sakuma_weeks(w);
                auto v = verify_angle_structure(t, expand_to_tetrahedra(assign_angles(w), t));
                bool exact = v.ok();
                for (const auto &s : v.class_sums)
                        exact = exact && s == Rational(2);
                if (!exact)
                        ++bad;
        }
        return {bad == 0, std::to_string(n) + " words, " + std::to_string(bad) + " failures", ""};
}

Outcome shape_table() {
        const std::pair<const char *, double> want[] = {{"I", 0.9902},   {"II", 0.9604},  {"III", 0.9024},
                                                        {"IV", 0.8855},  {"V", 0.8333},   {"VI", 0.7754},
                                                        {"VII", 0.7417}, {"VIII", 0.6768}, {"IX", 0.5833}};
        double worst = std::abs(v3() - 1.0149);
        for (auto [name, v] : want)
                worst = std::max(worst, std::abs(shape_ratio(name) - v));
        return {worst <= 5e-4, "10 values, max deviation " + fmt("%.2e", worst), ""};
}

Outcome theorem_ratios_and_bound() {
        std::vector<std::string> off;
        std::ostringstream d;
        for (const auto &r : theorem_ratios())
                if (std::abs(r.computed - r.published) > 1e-3) {
                        off.push_back(r.label);
                        d << r.label << ": " << fmt("%.4f", r.computed) << " vs " << fmt("%.4f", r.published)
                          << "; ";
                }
        int n = 0, low = 0;
        double worst = 1e9;
        for (const auto &r : survey(enumerate_words(9, {1, 2}), false)) {
                ++n;
                worst = std::min(worst, *r.lower_mult / r.tet_count);
                if (0.8 * r.tet_count > *r.lower_mult)
                        ++low;
        }
        d << "11 ratios, " << off.size() << " off; 0.8 bound on " << n << " words, " << low
          << " below (min ratio " << fmt("%.4f", worst) << ")";
        std::string key;
        for (auto &s : off)
                key += s + "|";
        key += "below:" + std::to_string(low);
        return {off.empty() && low == 0, d.str(), key};
}

Outcome minimal_family() {
        int bad = 0;
        double worst = 0;
        for (int n = 1; n <= 8; ++n) {
                auto r = bounds_report(family_word(std::vector<int>(std::size_t(n), 1)), false);
                double gap = std::abs(*r.lower_mult - (2 * n + 1.3332));
                worst = std::max(worst, gap);
                int upper = 2 * n + 2;
                if (gap > 1e-3 || r.tet_count != upper || r.best_upper != upper ||
                    int(std::ceil(*r.lower_mult - 1e-9)) != upper)
                        ++bad;
        }
        return {bad == 0, "n = 1..8, " + std::to_string(bad) + " uncertified, lower bound within " + fmt("%.1e", worst),
                ""};
}

// Every inequality of the displayed chain, for each C separately.
Outcome corollary() {
        auto k = corollary_constants();
        bool consts = std::abs(k.volume_slope - 4.9632) <= 1e-3 && std::abs(k.volume_intercept - 3.3930) <= 1e-3 &&
                      std::abs(k.deficit_slope - 1.0368) <= 1e-3 && std::abs(k.deficit_slope - 1.0369) <= 1e-3 &&
                      std::abs(k.deficit_intercept + 0.0598) <= 1e-3 &&
                      std::abs(k.deficit_intercept + 0.0597) <= 1e-3 && std::abs(k.lower_slope - 0.9632) <= 1e-3 &&
                      std::abs(k.lower_offset - 0.393) <= 1e-3;
        int n = 0;
        int bad[4] = {0, 0, 0, 0};
        double margin[4] = {1e9, 1e9, 1e9, 1e9};
        for (int C = 0; C <= 3; ++C)
                for (const auto &r : survey(enumerate_words(6, {1, 2}, C), false)) {
                        if (r.n_inner < C)
                                continue;
                        ++n;
                        double vol = *r.lower_mult;
                        // V(Phi*)/v3 - deficit, the middle of the displayed chain
                        double middle = 2.0 * (r.n_inner + C - 1) + 4 * shape_ratio("V") -
                                        (k.deficit_slope * C + k.deficit_intercept);
                        margin[C] = std::min(margin[C], vol - *r.lower_additive);
                        if (!(vol + 1e-3 >= middle && middle + 1e-3 >= *r.lower_additive && vol >= *r.lower_additive))
                                ++bad[C];
                }
        std::ostringstream d, key;
        d << "constants " << (consts ? "match" : "differ") << "; " << n << " words;";
        for (int C = 0; C <= 3; ++C) {
                d << " C=" << C << ": " << bad[C] << " violations, margin " << fmt("%.4f", margin[C]) << ";";
                key << "C" << C << ":" << bad[C] << ' ';
        }
        key << (consts ? "constants" : "no-constants");
        int total = bad[0] + bad[1] + bad[2] + bad[3];
        return {consts && total == 0, d.str(), key.str()};
}

Outcome maximization() {
        auto rl = maximize_volume(build_sakuma_weeks(parse_word("RL")));
        bool ok = std::abs(rl.volume - 2.029883) <= 1e-5 && rl.gradient_norm <= 1e-8;
        int n = 0, bad = 0;
        double worst_grad = 0;
        auto words = enumerate_words(5, {1, 2});
        std::vector<BoundsReport> rs = survey(words, true);
        for (std::size_t i = 0; i < words.size(); ++i) {
                ++n;
                const auto &r = rs[i];
                auto m = maximize_volume(build_sakuma_weeks(words[i]));
                worst_grad = std::max(worst_grad, m.gradient_norm);
                if (!(m.volume + 1e-9 >= *r.explicit_volume && m.volume <= r.tet_count * v3() &&
                      m.gradient_norm <= 1e-8))
                        ++bad;
        }
        std::ostringstream d;
        d << "RL " << fmt("%.6f", rl.volume) << "; " << n << " words, " << bad << " out of range, max gradient "
          << fmt("%.1e", worst_grad);
        return {ok && bad == 0, d.str(), ""};
}

Outcome hygiene() {
        double worst = 0;
        for (int i = 1; i <= 1000; ++i) {
                double x = -4 + 8.0 * i / 1001;
                worst = std::max(worst, std::abs(lobachevsky(-x) + lobachevsky(x)));
                worst = std::max(worst, std::abs(lobachevsky(x + pi) - lobachevsky(x)));
                worst = std::max(worst, std::abs(lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + pi / 2)));
        }
        // gradient of the volume functional at random interior points
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(0.05, pi - 0.05);
        double gworst = 0;
        for (int i = 0; i < 100; ++i) {
                std::vector<std::array<double, 3>> a(4);
                for (auto &t : a)
                        for (auto &x : t)
                                x = u(rng);
                std::size_t tet = std::size_t(i % 4), m = std::size_t(i % 3);
                double h = 1e-6;
                auto up = a, dn = a;
                up[tet][m] += h;
                dn[tet][m] -= h;
                double fd = (volume_functional(up) - volume_functional(dn)) / (2 * h);
                gworst = std::max(gworst, std::abs(fd - lobachevsky_derivative(a[tet][m])));
        }
        return {worst <= 1e-10 && gworst <= 1e-5,
                "identity error " + fmt("%.1e", worst) + ", gradient error " + fmt("%.1e", gworst), ""};
}

} // namespace

int main() {
        apply_thread_cap();
        const std::vector<Criterion> cs = {
            {1, "golden gluing tables", golden_tables},
            {2, "golden signatures", golden_signatures},
            {3, "edge-count lemma", edge_count},
            {4, "degree lemmas as iff", degree_lemmas, "d3:d4:LRL RLR "},
            {5, "angle-structure validity", angle_validity},
            {6, "shape volume table", shape_table},
            {7, "theorem ratios and 0.8 bound", theorem_ratios_and_bound,
             "RL^2R with the (II, X2, II) structure|below:0"},
            {8, "minimal family", minimal_family},
            {9, "additive bounds", corollary, "C0:6 C1:0 C2:0 C3:0 constants"},
            {10, "volume maximization", maximization},
            {11, "numerical hygiene", hygiene},
        };
        int pass = 0, known = 0, unexpected = 0;
        for (const auto &c : cs) {
                Outcome o;
                try {
                        o = c.run();
                } catch (const std::exception &e) {
                        o = {false, std::string("exception: ") + e.what(), "exception"};
                }
                const char *tag;
                if (o.pass) {
                        ++pass;
                        tag = c.known_failure ? "PASS (expected a known failure)" : "PASS";
                        if (c.known_failure)
                                ++unexpected;
                } else if (c.known_failure && o.failure_key == c.known_failure) {
                        ++known;
                        tag = "FAIL (known)";
                } else {
                        ++unexpected;
                        tag = "FAIL";
                }
                std::printf("criterion %2d  %-32s %s  %s\n", c.id, c.name, tag, o.detail.c_str());
                std::fflush(stdout);
        }
        std::printf("%d passed, %d known failures, %d unexpected\n", pass, known, unexpected);
        return unexpected == 0 ? 0 : 1;
}
