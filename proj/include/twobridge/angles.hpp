#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "twobridge/blocks.hpp"
#include "twobridge/triangulation.hpp"

namespace twobridge {

// Angles are exact rational multiples of pi.
using Rational = boost::rational<long long>;
using Triple = std::array<Rational, 3>;
std::string format_pi(const Rational &r); // "7/24 π"

struct Shape {
        std::string name;
        Triple angles;
};
// (0), (I)..(IX) and X2, in that order.
const std::vector<Shape> &shape_catalog();
const Shape &shape_by_name(const std::string &name);
// Name of the catalog shape equal to t up to reordering, if any.
std::optional<std::string> classify(const Triple &t);

// One triple per layer, in absolute position order: theta[0] sits on the
// layer's horizontal edge pair, theta[1] on the vertical pair, theta[2] on the
// diagonal pair. Both tetrahedra of a layer carry the same triple.
struct LayerAngles {
        Triple theta;
        std::string shape;
};
struct AngleAssignment {
        std::vector<LayerAngles> layers;
};

// w must be R L^{a1} ... (L^{an} R | R^{an} L) with every a_i in {1, 2}.
AngleAssignment assign_angles(const Word &w, const BlockDecomposition &d);
AngleAssignment assign_angles(const Word &w);
bool in_theorem_family(const Word &w);

// angle[tet][edge], edge numbered as in EDGE_VERTS.
using EdgeAngles = std::vector<std::array<Rational, 6>>;
EdgeAngles expand_to_tetrahedra(const AngleAssignment &a, const Triangulation &t);

struct AngleVerification {
        bool positive = true;       // every angle in (0, pi)
        bool opposite_equal = true; // opposite edges carry equal angles
        bool tet_sums = true;       // each tetrahedron's triple sums to pi
        bool edge_sums = true;      // each edge class sums to 2 pi
        std::vector<Rational> class_sums;
        std::vector<int> bad_classes;
        std::vector<std::string> failures;
        bool ok() const { return failures.empty(); }
};
AngleVerification verify_angle_structure(const Triangulation &t, const EdgeAngles &angles);

// Floating-point variant for angles coming out of the maximizer.
struct RealCheck {
        double max_tet_error = 0, max_edge_error = 0, min_angle = 0, max_angle = 0;
        bool ok(double tol = 1e-9) const;
};
RealCheck verify_real_angles(const Triangulation &t, const std::vector<std::array<double, 6>> &angles);

using DeficitTriple = Triple;
// (start deficit, end deficit) of a block: 2 pi minus the angle the block's
// layers put on the level edges below its first layer and above its last
// layer. Positions follow the (horizontal, vertical, diagonal) frame of that
// first / last layer.
std::pair<DeficitTriple, DeficitTriple> boundary_deficits(const Triangulation &t, const Word &w, const Block &b,
                                                          const AngleAssignment &a);
// Edge classes of the level below (top = false) or above a layer, by
// (horizontal, vertical, diagonal) position in that layer's frame.
std::array<int, 3> level_classes(const Triangulation &t, const EdgeClassTable &ec, int layer, bool top);
// Layers (inclusive) covered by a block.
std::pair<int, int> block_layers(const Word &w, const Block &b);

} // namespace twobridge
