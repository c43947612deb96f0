#pragma once

#include <string>

#include "twobridge/triangulation.hpp"

namespace twobridge {

// Isomorphism signatures in the established scheme for generalised
// triangulations: minimal string over all 24 * n starting labelings.
std::string encode_isosig(const Triangulation &t);
// Same result; the starting labelings are scanned by one thread.
std::string encode_isosig_serial(const Triangulation &t);
// Signature from one fixed start (tetrahedron, vertex relabeling).
std::string isosig_from(const Triangulation &t, int start, Perm4 relabel);

Triangulation decode_isosig(const std::string &s);
bool are_isomorphic(const Triangulation &a, const Triangulation &b);

// Applies tetrahedron permutation `order` (new index of old tet i is
// order[i]) and per-tetrahedron vertex relabelings.
Triangulation relabel(const Triangulation &t, const std::vector<int> &order, const std::vector<Perm4> &vertex_maps);

} // namespace twobridge
