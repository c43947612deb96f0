#pragma once

#include <array>
#include <string>
#include <vector>

#include "twobridge/perm.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

// Edge e of a tetrahedron joins EDGE_VERTS[e][0] and EDGE_VERTS[e][1].
inline constexpr int EDGE_VERTS[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
int edge_number(int a, int b);
// The three opposite-edge pairs {01,23}, {02,13}, {03,12} are matchings 0, 1, 2.
inline constexpr int EDGE_MATCHING[6] = {0, 1, 2, 2, 1, 0};

enum class Role { vertical = 0, horizontal = 1, diagonal = 2 };
const char *role_name(Role r);

// Which matching carries each role in one layer.
struct LayerFrame {
        int vertical, horizontal, diagonal;
        Role role_of(int matching) const;
};

struct Gluing {
        int tet = -1;    // -1: boundary
        Perm4 perm;      // vertices of this tet -> vertices of the neighbour
};

// Face f of a tetrahedron is the face opposite vertex f.
class Triangulation {
public:
        Triangulation() = default;
        explicit Triangulation(int n) : adj_(std::size_t(n)) {}

        int size() const { return int(adj_.size()); }
        int add_tet();
        // Glue face f of t to face p[f] of u; also sets the reverse gluing.
        void join(int t, int f, int u, Perm4 p);
        void unjoin(int t, int f);
        const Gluing &gluing(int t, int f) const { return adj_[std::size_t(t)][std::size_t(f)]; }
        bool glued(int t, int f) const { return gluing(t, f).tet >= 0; }

        // Builder metadata; empty for triangulations from other sources.
        std::vector<int> layer_of;
        std::vector<LayerFrame> frames;
        bool has_layers() const { return !layer_of.empty(); }

        bool operator==(const Triangulation &o) const;

private:
        std::vector<std::array<Gluing, 4>> adj_;
};

struct EdgeEmbedding {
        int tet;
        int edge;
        bool operator==(const EdgeEmbedding &) const = default;
        auto operator<=>(const EdgeEmbedding &) const = default;
};

struct EdgeClass {
        std::vector<EdgeEmbedding> embeddings; // ascending (tet, edge)
        int degree() const { return int(embeddings.size()); }
};

// Classes are numbered in order of their smallest embedding.
struct EdgeClassTable {
        std::vector<EdgeClass> classes;
        std::vector<std::array<int, 6>> class_of; // [tet][edge] -> class id
        std::vector<int> degrees() const;
};

EdgeClassTable edge_classes(const Triangulation &t);

// Role of an edge embedding in a layered triangulation.
Role edge_role(const Triangulation &t, int tet, int edge);

Triangulation build_sakuma_weeks(const Word &w);

struct ValidationReport {
        bool involution = true;
        bool all_faces_glued = true;
        bool no_self_gluing = true;
        bool edge_count_matches = true; // #edge classes == #tetrahedra
        bool vertex_links_torus = true; // every vertex link closed with chi = 0
        int edge_class_count = 0;
        int vertex_count = 0;
        std::vector<int> link_euler;
        std::vector<std::string> failures;
        bool ok() const { return failures.empty(); }
};
ValidationReport validate(const Triangulation &t);

struct DegreePredicates {
        bool has_degree3;
        bool has_degree4;
        bool operator==(const DegreePredicates &) const = default;
};
// Computed from the edge classes.
DegreePredicates degree_predicates(const Triangulation &t);
// What the two degree lemmas predict from the exponents of w.
DegreePredicates lemma_degree_predicates(const Word &w);

// Regina-style table: columns Face 012, 013, 023, 123; entries "tet (img)".
std::string gluing_table(const Triangulation &t);
Triangulation parse_gluing_table(const std::string &text);

} // namespace twobridge
