#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twobridge/triangulation.hpp"

namespace twobridge {

// The tetrahedra around an edge class, in cyclic order. In tet k the edge
// joins vertices verts[k][0], verts[k][1]; the walk leaves tet k through the
// face opposite verts[k][2]. Starts from the class's smallest embedding.
struct EdgeWalk {
        std::vector<int> tets;
        std::vector<Perm4> verts;
        bool distinct_tets() const;
};
EdgeWalk walk_edge(const Triangulation &t, const EdgeClassTable &ec, int edge_class);

// Throw std::invalid_argument when the move does not apply.
Triangulation pachner_32(const Triangulation &t, int edge_class);
// `face` is (tet, face index) on one side of an internal triangle.
Triangulation pachner_23(const Triangulation &t, int tet, int face);
// axis 0: new diagonal through the equator vertices met first and third on
// the walk; axis 1: through the second and fourth.
Triangulation move_44(const Triangulation &t, int edge_class, int axis);

bool can_32(const Triangulation &t, const EdgeClassTable &ec, int edge_class);
bool can_44(const Triangulation &t, const EdgeClassTable &ec, int edge_class);

struct MoveRecord {
        std::string move; // "3-2" or "4-4"
        int target;       // edge class id in the triangulation the move acted on
        int axis;         // -1 for 3-2
        int tets_after;
        // For a 4-4: how many (edge, axis) choices enabled a 3-2, and whether
        // they all led to isomorphic results after that 3-2.
        int branches = 0;
        bool branches_agree = true;
};

struct SimplificationTrace {
        std::vector<MoveRecord> moves;
        Triangulation result;
};

SimplificationTrace simplify(const Triangulation &t);

} // namespace twobridge
