#include "doctest.h"

#include <stdexcept>

#include "twobridge/isosig.hpp"
#include "twobridge/moves.hpp"
#include "twobridge/word.hpp"

using namespace twobridge;

namespace {

Triangulation sw(const char *w) { return build_sakuma_weeks(parse_word(w)); }

int first_class_of_degree(const Triangulation &t, int d) {
        auto ec = edge_classes(t);
        for (int c = 0; c < int(ec.classes.size()); ++c)
                if (ec.classes[std::size_t(c)].degree() == d)
                        return c;
        return -1;
}

}

TEST_SUITE("moves") {

TEST_CASE("3-2 on either degree-3 edge of R^2LR") {
        auto t = sw("R^2LR");
        for (int c : {1, 2}) {
                auto r = pachner_32(t, c);
                CHECK(r.size() == 5);
                CHECK(validate(r).ok());
                CHECK(encode_isosig(r) == "fLLQcbcdeeetsfxxh");
        }
}

TEST_CASE("3-2 preconditions") {
        auto t = sw("R^2LR");
        CHECK_THROWS_AS(pachner_32(t, 0), std::invalid_argument); // degree 12
        CHECK_THROWS_AS(pachner_32(t, 99), std::invalid_argument);
        CHECK_FALSE(can_32(sw("RLRL"), edge_classes(sw("RLRL")), 0));
}

TEST_CASE("4-4 on any degree-4 edge of RL^3R") {
        auto t = sw("RL^3R");
        auto ec = edge_classes(t);
        int tried = 0;
        for (int c = 0; c < int(ec.classes.size()); ++c) {
                if (ec.classes[std::size_t(c)].degree() != 4)
                        continue;
                for (int axis : {0, 1}) {
                        auto r = move_44(t, c, axis);
                        CHECK(r.size() == 8);
                        CHECK(validate(r).ok());
                        CHECK(encode_isosig(r) == "iLLMLQcbcdefhghhmvftgafqa");
                        ++tried;
                }
        }
        CHECK(tried == 8);
        CHECK_THROWS(move_44(t, 0, 0)); // degree 8
        CHECK_THROWS(move_44(t, 3, 2));
}

TEST_CASE("4-4 preserves counts and twice on the same axis returns home") {
        auto t = sw("RL^3R");
        auto r = move_44(t, 3, 0);
        CHECK(edge_classes(r).classes.size() == edge_classes(t).classes.size());
        // The new diagonal is a degree-4 edge; flipping it back gives t again.
        auto ec = edge_classes(r);
        bool home = false;
        for (int c = 0; c < int(ec.classes.size()) && !home; ++c)
                if (ec.classes[std::size_t(c)].degree() == 4)
                        for (int axis : {0, 1})
                                if (are_isomorphic(move_44(r, c, axis), t))
                                        home = true;
        CHECK(home);
}

TEST_CASE("2-3 then 3-2 round trip") {
        for (const char *w : {"RLR", "R^2LR", "RLRL", "RL^3R"}) {
                auto t = sw(w);
                for (int tet = 0; tet < t.size(); ++tet)
                        for (int f = 0; f < 4; ++f) {
                                if (t.gluing(tet, f).tet == tet)
                                        continue;
                                auto up = pachner_23(t, tet, f);
                                CHECK(up.size() == t.size() + 1);
                                CHECK(validate(up).ok());
                                CHECK(edge_classes(up).classes.size() == edge_classes(t).classes.size() + 1);
                                // the new edge is the highest-numbered class of degree 3 we created;
                                // some degree-3 class must undo the move
                                auto ec = edge_classes(up);
                                bool back = false;
                                for (int c = 0; c < int(ec.classes.size()) && !back; ++c)
                                        if (can_32(up, ec, c) && are_isomorphic(pachner_32(up, c), t))
                                                back = true;
                                CHECK(back);
                        }
        }
}

TEST_CASE("2-3 on RL^3R") {
        auto r = pachner_23(sw("RL^3R"), 0, 0);
        CHECK(r.size() == 9);
        CHECK(validate(r).ok());
}

TEST_CASE("simplify reproduces the published chain") {
        auto tr = simplify(sw("R^2LR"));
        CHECK(encode_isosig(tr.result) == "fLLQcbcdeeetsfxxh");
        REQUIRE(tr.moves.size() == 1);
        CHECK(tr.moves[0].move == "3-2");

        tr = simplify(sw("RL^3R"));
        REQUIRE(tr.moves.size() == 2);
        CHECK(tr.moves[0].move == "4-4");
        CHECK(tr.moves[0].tets_after == 8);
        CHECK(tr.moves[0].branches == 8);
        CHECK(tr.moves[0].branches_agree);
        CHECK(tr.moves[1].move == "3-2");
        CHECK(tr.result.size() == 7);
        CHECK(encode_isosig(tr.result) == "hLLMPkbcdfggfgmvfafwkf");
}

TEST_CASE("the theorem family is a fixed point of simplify") {
        for (const char *w : {"RL", "RLR", "RLRL"})
                CHECK(simplify(sw(w)).moves.empty());
}

TEST_CASE("degree-3 walk visits distinct tetrahedra") {
        auto t = sw("R^2LR");
        int c = first_class_of_degree(t, 3);
        auto w = walk_edge(t, edge_classes(t), c);
        CHECK(w.tets.size() == 3);
        CHECK(w.distinct_tets());
}

}
