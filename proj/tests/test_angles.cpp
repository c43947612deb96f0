#include "doctest.h"

#include <map>
#include <set>

#include "twobridge/angles.hpp"
#include "twobridge/blocks.hpp"
#include "twobridge/word.hpp"

using namespace twobridge;

namespace {

Rational q(long long a, long long b) { return Rational(a, b); }

std::map<std::string, int> shape_counts(const char *w) {
        std::map<std::string, int> out;
        for (const auto &l : assign_angles(parse_word(w)).layers)
                ++out[l.shape];
        return out;
}

AngleVerification check(const Word &w, const AngleAssignment &a) {
        auto t = build_sakuma_weeks(w);
        return verify_angle_structure(t, expand_to_tetrahedra(a, t));
}

}

TEST_SUITE("angles") {

TEST_CASE("format") {
        CHECK(format_pi(q(7, 24)) == "7/24 π");
        CHECK(format_pi(q(1, 1)) == "1 π");
        CHECK(format_pi(q(5, 3)) == "5/3 π");
        CHECK(format_pi(q(0, 1)) == "0");
}

TEST_CASE("shape catalog") {
        CHECK(shape_catalog().size() == 11);
        for (const auto &s : shape_catalog()) {
                CHECK(s.angles[0] + s.angles[1] + s.angles[2] == Rational(1));
                for (const auto &x : s.angles) {
                        CHECK(x > Rational(0));
                        CHECK(x < Rational(1));
                }
        }
        CHECK(classify({q(3, 8), q(1, 3), q(7, 24)}) == std::optional<std::string>("I"));
        CHECK(classify({q(1, 2), q(1, 4), q(1, 4)}) == std::optional<std::string>("III"));
        CHECK_FALSE(classify({q(1, 2), q(1, 3), q(1, 6) + q(1, 100)}).has_value());
        CHECK_THROWS(shape_by_name("XI"));
}

TEST_CASE("worked assignment") {
        auto a = assign_angles(parse_word("RLR^2LR"));
        REQUIRE(a.layers.size() == 5);
        const char *names[] = {"V", "I", "VI", "III", "VIII"};
        for (int i = 0; i < 5; ++i)
                CHECK(a.layers[std::size_t(i)].shape == names[i]);
        CHECK(a.layers[1].theta == Triple{q(7, 24), q(3, 8), q(1, 3)});
        CHECK(check(parse_word("RLR^2LR"), a).ok());
}

TEST_CASE("RL^2R uses II, X2, II") {
        auto a = assign_angles(parse_word("RL^2R"));
        REQUIRE(a.layers.size() == 3);
        CHECK(a.layers[0].shape == "II");
        CHECK(a.layers[1].shape == "X2");
        CHECK(a.layers[2].shape == "II");
        CHECK(check(parse_word("RL^2R"), a).ok());
}

TEST_CASE("the regular shape on every layer is not an angle structure of RL^2R") {
        auto w = parse_word("RL^2R");
        AngleAssignment a;
        for (int i = 0; i < 3; ++i)
                a.layers.push_back({{q(1, 3), q(1, 3), q(1, 3)}, "0"});
        auto v = check(w, a);
        CHECK_FALSE(v.ok());
        CHECK(v.tet_sums);
        CHECK_FALSE(v.edge_sums);
        CHECK_FALSE(v.bad_classes.empty());
}

TEST_CASE("words outside the family are rejected") {
        CHECK_THROWS(assign_angles(parse_word("R^2LR")));
        CHECK_THROWS(assign_angles(parse_word("RL^3R")));
        CHECK_THROWS(assign_angles(parse_word("RL")));
        CHECK_FALSE(in_theorem_family(parse_word("RL^2R^2")));
        CHECK(in_theorem_family(parse_word("RLR^2L")));
}

TEST_CASE("shape counts per block type") {
        using M = std::map<std::string, int>;
        // B1 at both ends: initial V, regular layers, final V
        CHECK(shape_counts("RLRLR") == M{{"0", 2}, {"V", 2}});
        // all B2, k = 2, 3
        CHECK(shape_counts("RL^2R^2L") == M{{"III", 3}, {"VII", 2}});
        CHECK(shape_counts("RL^2R^2L^2R") == M{{"III", 5}, {"VII", 2}});
        // B2 at start then B1
        CHECK(shape_counts("RL^2RL") == M{{"I", 1}, {"V", 1}, {"VI", 1}, {"VII", 1}});
        // B3 at the end
        CHECK(shape_counts("RLR^2LR") == M{{"I", 1}, {"III", 1}, {"V", 1}, {"VI", 1}, {"VIII", 1}});
        // B3 in the middle (two squares in one run), then B1
        CHECK(shape_counts("RLR^2L^2RLR") == M{{"I", 1}, {"II", 1}, {"III", 2}, {"IV", 1}, {"V", 2}, {"VI", 1}});
        // unfinished B3 with a single square
        CHECK(shape_counts("RLR^2L") == M{{"I", 1}, {"V", 1}, {"VI", 1}, {"VII", 1}});
        // B2 at the end, k = 2, 3
        CHECK(shape_counts("RLR^2L^2R") == M{{"0", 1}, {"IX", 1}, {"V", 4}});
        CHECK(shape_counts("RLR^2L^2R^2L") == M{{"0", 1}, {"III", 1}, {"IX", 1}, {"V", 5}});
        // B2 at the end with k = 4 alternates III and V through the block:
        // one III fewer and one V more than the k >= 3 count pattern
        CHECK(shape_counts("RLRLR^2L^2R^2L^2R") == M{{"0", 3}, {"III", 2}, {"IX", 1}, {"V", 6}});
        // unfinished B3 with two squares closes with VII
        CHECK(shape_counts("RLR^2LR^2L") == M{{"I", 1}, {"III", 2}, {"V", 1}, {"VI", 1}, {"VII", 1}, {"VIII", 1}});
}

TEST_CASE("every layer is a catalog shape and every family word verifies") {
        const auto &cat = shape_catalog();
        std::set<std::string> names;
        for (const auto &s : cat)
                names.insert(s.name);
        int words = 0;
        for (const auto &w : enumerate_words(7, {1, 2})) {
                auto a = assign_angles(w);
                CAPTURE(render(w));
                CHECK(int(a.layers.size()) == w.ell() - 1);
                for (const auto &l : a.layers) {
                        auto c = classify(l.theta);
                        REQUIRE(c.has_value());
                        CHECK(*c == l.shape);
                        CHECK(names.count(l.shape) == 1);
                }
                auto v = check(w, a);
                CHECK(v.ok());
                for (const auto &s : v.class_sums)
                        CHECK(s == Rational(2));
                ++words;
        }
        CHECK(words == 254);
}

TEST_CASE("boundary deficits") {
        // B1 opening with L, after a B2 at the start
        auto w = parse_word("RL^2R^2LRL");
        auto t = build_sakuma_weeks(w);
        auto d = decompose(inner_word(w));
        auto a = assign_angles(w, d);
        REQUIRE(d.blocks.size() == 2);
        REQUIRE(d.blocks[1].kind == BlockKind::B1);
        CHECK(boundary_deficits(t, w, d.blocks[1], a).first == Triple{q(1, 3), q(1, 1), q(5, 3)});

        // B3 closing with R, between two B1 blocks
        w = parse_word("RLRL^2RLRL");
        t = build_sakuma_weeks(w);
        d = decompose(inner_word(w));
        a = assign_angles(w, d);
        REQUIRE(d.blocks.size() == 3);
        REQUIRE(d.blocks[1].kind == BlockKind::B3);
        CHECK(boundary_deficits(t, w, d.blocks[1], a).second == Triple{q(1, 3), q(1, 1), q(5, 3)});

        // at the very start the closure layer also feeds the bottom level
        w = parse_word("RLRLR");
        t = build_sakuma_weeks(w);
        d = decompose(inner_word(w));
        CHECK(boundary_deficits(t, w, d.blocks[0], assign_angles(w, d)).first == Triple{q(1, 3), q(1, 1), q(4, 3)});
}

// Consecutive blocks whose shared level classes meet no other layers:
// the earlier block's end deficit, moved into the later block's frame,
// complements the later block's start deficit to 2 pi.
TEST_CASE("deficit compatibility at clean junctions") {
        int clean = 0;
        for (const auto &w : enumerate_words(8, {1, 2})) {
                auto d = decompose(inner_word(w));
                if (d.blocks.size() < 2)
                        continue;
                auto t = build_sakuma_weeks(w);
                auto ec = edge_classes(t);
                auto a = assign_angles(w, d);
                auto letters = inner_word(w).letters();
                auto offs = syllable_offsets(inner_word(w).exponents());
                for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i) {
                        const auto &b0 = d.blocks[i], &b1 = d.blocks[i + 1];
                        auto [l0a, l0b] = block_layers(w, b0);
                        auto [l1a, l1b] = block_layers(w, b1);
                        auto lv = level_classes(t, ec, l1a, false);
                        bool ok = true;
                        for (int c : lv)
                                for (const auto &e : ec.classes[std::size_t(c)].embeddings) {
                                        int L = t.layer_of[std::size_t(e.tet)];
                                        if (L < l0a || L > l1b)
                                                ok = false;
                                }
                        if (!ok)
                                continue;
                        ++clean;
                        auto eps = boundary_deficits(t, w, b0, a).second;
                        auto delta = boundary_deficits(t, w, b1, a).first;
                        char first = letters[std::size_t(offs[std::size_t(b1.start)])];
                        if (first == 'R')
                                std::swap(eps[1], eps[2]);
                        else
                                std::swap(eps[0], eps[2]);
                        CAPTURE(render(w));
                        CAPTURE(i);
                        for (int k = 0; k < 3; ++k)
                                CHECK(eps[std::size_t(k)] + delta[std::size_t(k)] == Rational(2));
                        (void)l0b;
                        (void)l1b;
                }
        }
        CHECK(clean > 100);
}

// Changing one layer's triple only moves the sums of classes that layer touches.
TEST_CASE("perturbation locality") {
        auto w = parse_word("RLR^2L^2RLR");
        auto t = build_sakuma_weeks(w);
        auto ec = edge_classes(t);
        auto a = assign_angles(w);
        auto base = verify_angle_structure(t, expand_to_tetrahedra(a, t)).class_sums;
        for (std::size_t L = 0; L < a.layers.size(); ++L) {
                auto b = a;
                b.layers[L].theta = {q(1, 3), q(1, 3), q(1, 3)};
                auto sums = verify_angle_structure(t, expand_to_tetrahedra(b, t)).class_sums;
                for (std::size_t c = 0; c < sums.size(); ++c) {
                        bool touches = false;
                        for (const auto &e : ec.classes[c].embeddings)
                                touches |= t.layer_of[std::size_t(e.tet)] == int(L);
                        if (!touches)
                                CHECK(sums[c] == base[c]);
                }
        }
}

TEST_CASE("expand rejects mismatched inputs") {
        auto t = build_sakuma_weeks(parse_word("RLR"));
        CHECK_THROWS(expand_to_tetrahedra(assign_angles(parse_word("RLRL")), t));
        Triangulation bare(2);
        CHECK_THROWS(expand_to_tetrahedra(assign_angles(parse_word("RLR")), bare));
}

}
