#include "twobridge/triangulation.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twobridge {

int edge_number(int a, int b) {
        if (a > b)
                std::swap(a, b);
        for (int e = 0; e < 6; ++e)
                if (EDGE_VERTS[e][0] == a && EDGE_VERTS[e][1] == b)
                        return e;
        throw std::invalid_argument("not an edge");
}

const char *role_name(Role r) {
        switch (r) {
        case Role::vertical: return "vertical";
        case Role::horizontal: return "horizontal";
        case Role::diagonal: return "diagonal";
        }
        return "?";
}

Role LayerFrame::role_of(int m) const {
        if (m == vertical)
                return Role::vertical;
        if (m == horizontal)
                return Role::horizontal;
        return Role::diagonal;
}

int Triangulation::add_tet() {
        adj_.emplace_back();
        return size() - 1;
}

void Triangulation::join(int t, int f, int u, Perm4 p) {
        auto &a = adj_.at(std::size_t(t))[std::size_t(f)];
        auto &b = adj_.at(std::size_t(u))[std::size_t(p[f])];
        if (a.tet >= 0 || b.tet >= 0)
                throw std::logic_error("face already glued");
        if (t == u && p[f] == f)
                throw std::logic_error("cannot glue a face to itself");
        a = {u, p};
        b = {t, p.inverse()};
}

void Triangulation::unjoin(int t, int f) {
        auto &a = adj_.at(std::size_t(t))[std::size_t(f)];
        if (a.tet < 0)
                return;
        adj_[std::size_t(a.tet)][std::size_t(a.perm[f])] = {};
        a = {};
}

bool Triangulation::operator==(const Triangulation &o) const {
        if (size() != o.size())
                return false;
        for (int t = 0; t < size(); ++t)
                for (int f = 0; f < 4; ++f) {
                        const auto &a = gluing(t, f), &b = o.gluing(t, f);
                        if (a.tet != b.tet || (a.tet >= 0 && !(a.perm == b.perm)))
                                return false;
                }
        return true;
}

namespace {

struct Dsu {
        std::vector<int> rank, parent;
        boost::disjoint_sets<int *, int *> sets;
        explicit Dsu(int n) : rank(std::size_t(n)), parent(std::size_t(n)), sets(rank.data(), parent.data()) {
                for (int i = 0; i < n; ++i)
                        sets.make_set(i);
        }
        void unite(int a, int b) { sets.union_set(a, b); }
        int find(int a) { return sets.find_set(a); }
};

} // namespace

std::vector<int> EdgeClassTable::degrees() const {
        std::vector<int> d;
        for (const auto &c : classes)
                d.push_back(c.degree());
        return d;
}

EdgeClassTable edge_classes(const Triangulation &t) {
        int n = t.size();
        Dsu dsu(6 * n);
        for (int i = 0; i < n; ++i)
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0)
                                continue;
                        for (int e = 0; e < 6; ++e) {
                                int a = EDGE_VERTS[e][0], b = EDGE_VERTS[e][1];
                                if (a == f || b == f)
                                        continue;
                                dsu.unite(6 * i + e, 6 * g.tet + edge_number(g.perm[a], g.perm[b]));
                        }
                }
        EdgeClassTable table;
        table.class_of.assign(std::size_t(n), {});
        std::map<int, int> id;
        for (int i = 0; i < n; ++i)
                for (int e = 0; e < 6; ++e) {
                        int root = dsu.find(6 * i + e);
                        auto [it, fresh] = id.try_emplace(root, int(table.classes.size()));
                        if (fresh)
                                table.classes.emplace_back();
                        table.classes[std::size_t(it->second)].embeddings.push_back({i, e});
                        table.class_of[std::size_t(i)][std::size_t(e)] = it->second;
                }
        return table;
}

Role edge_role(const Triangulation &t, int tet, int edge) {
        if (!t.has_layers())
                throw std::logic_error("triangulation has no layer metadata");
        const auto &fr = t.frames.at(std::size_t(t.layer_of.at(std::size_t(tet))));
        return fr.role_of(EDGE_MATCHING[edge]);
}

namespace {

constexpr int MATCH[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};

} // namespace

// Layer i holds tetrahedra A = 2i and B = 2i+1 between two four-punctured
// spheres. With (p,q),(r,s) the diagonal matching of the layer, A carries the
// bottom faces opposite r,s and the top faces opposite p,q; B the others.
// Vertices are labelled by the four punctures throughout, so consecutive
// layers glue by the identity, and each end is closed by folding the end
// faces along one matching.
Triangulation build_sakuma_weeks(const Word &w) {
        if (!is_hyperbolic(w))
                throw std::invalid_argument("word is not hyperbolic (needs at least two syllables)");
        std::string letters = w.letters();
        int layers = int(letters.size()) - 1;
        if (layers < 1)
                throw std::invalid_argument("word too short");

        Triangulation t(2 * layers);
        int v = 0, h = 1, d = 2;
        for (int i = 0; i < layers; ++i) {
                if (letters[std::size_t(i)] == 'R')
                        std::swap(v, d);
                else
                        std::swap(h, d);
                t.frames.push_back({v, h, d});
                t.layer_of.push_back(i);
                t.layer_of.push_back(i);
        }

        auto faces = [&](int layer, bool top) {
                const auto &m = MATCH[t.frames[std::size_t(layer)].diagonal];
                int a = 2 * layer, b = 2 * layer + 1;
                std::array<int, 4> owner{};
                owner[std::size_t(m[0][0])] = owner[std::size_t(m[0][1])] = top ? a : b;
                owner[std::size_t(m[1][0])] = owner[std::size_t(m[1][1])] = top ? b : a;
                return owner;
        };
        for (int i = 0; i + 1 < layers; ++i) {
                auto up = faces(i, true), down = faces(i + 1, false);
                for (int j = 0; j < 4; ++j)
                        t.join(up[std::size_t(j)], j, down[std::size_t(j)], Perm4());
        }
        auto fold = [&](const std::array<int, 4> &owner, int matching) {
                for (const auto &pair : MATCH[matching]) {
                        int c = -1, e = -1;
                        for (int x = 0; x < 4; ++x)
                                if (x != pair[0] && x != pair[1])
                                        (c < 0 ? c : e) = x;
                        if (!t.glued(owner[std::size_t(c)], c))
                                t.join(owner[std::size_t(c)], c, owner[std::size_t(e)], Perm4::transposition(c, e));
                }
        };
        fold(faces(0, false), letters.front() == 'R' ? t.frames.front().vertical : t.frames.front().horizontal);
        const auto &last = t.frames.back();
        fold(faces(layers - 1, true), letters.back() == 'R' ? last.vertical : last.horizontal);
        return t;
}

ValidationReport validate(const Triangulation &t) {
        ValidationReport r;
        int n = t.size();
        for (int i = 0; i < n; ++i)
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0) {
                                r.all_faces_glued = false;
                                continue;
                        }
                        if (g.tet == i)
                                r.no_self_gluing = false;
                        const auto &back = t.gluing(g.tet, g.perm[f]);
                        if (back.tet != i || !(back.perm == g.perm.inverse()))
                                r.involution = false;
                }
        if (!r.involution)
                r.failures.push_back("gluing map is not an involution");
        if (!r.all_faces_glued)
                r.failures.push_back("not all faces glued");

        auto ec = edge_classes(t);
        r.edge_class_count = int(ec.classes.size());
        r.edge_count_matches = r.edge_class_count == n;
        if (!r.edge_count_matches)
                r.failures.push_back("edge class count " + std::to_string(r.edge_class_count) + " != tetrahedron count " +
                                     std::to_string(n));

        // Vertex links from truncation: one triangle per corner, three sides
        // per triangle paired by the gluings, link vertices = edge ends.
        Dsu corners(4 * n), ends(16 * n);
        for (int i = 0; i < n; ++i)
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0)
                                continue;
                        for (int a = 0; a < 4; ++a) {
                                if (a == f)
                                        continue;
                                corners.unite(4 * i + a, 4 * g.tet + g.perm[a]);
                                for (int b = 0; b < 4; ++b)
                                        if (b != a && b != f)
                                                ends.unite(16 * i + 4 * a + b, 16 * g.tet + 4 * g.perm[a] + g.perm[b]);
                        }
                }
        std::map<int, int> vid;
        std::vector<long> tri, sides, verts;
        for (int i = 0; i < n; ++i)
                for (int a = 0; a < 4; ++a) {
                        auto [it, fresh] = vid.try_emplace(corners.find(4 * i + a), int(vid.size()));
                        if (fresh) {
                                tri.push_back(0);
                                sides.push_back(0);
                                verts.push_back(0);
                        }
                        tri[std::size_t(it->second)] += 1;
                        sides[std::size_t(it->second)] += 3;
                }
        std::map<int, bool> seen_end;
        for (int i = 0; i < n; ++i)
                for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                                if (a == b)
                                        continue;
                                int root = ends.find(16 * i + 4 * a + b);
                                if (seen_end.emplace(root, true).second)
                                        verts[std::size_t(vid[corners.find(4 * i + a)])] += 1;
                        }
        r.vertex_count = int(vid.size());
        for (std::size_t k = 0; k < tri.size(); ++k) {
                if (sides[k] % 2 != 0) {
                        r.vertex_links_torus = false;
                        r.link_euler.push_back(0);
                        continue;
                }
                long chi = verts[k] - sides[k] / 2 + tri[k];
                r.link_euler.push_back(int(chi));
                if (chi != 0)
                        r.vertex_links_torus = false;
        }
        if (!r.vertex_links_torus)
                r.failures.push_back("a vertex link is not a closed surface of Euler characteristic 0");
        return r;
}

DegreePredicates degree_predicates(const Triangulation &t) {
        DegreePredicates p{false, false};
        for (int d : edge_classes(t).degrees()) {
                p.has_degree3 |= d == 3;
                p.has_degree4 |= d == 4;
        }
        return p;
}

DegreePredicates lemma_degree_predicates(const Word &w) {
        auto a = w.exponents();
        bool d3 = a.front() > 1 || a.back() > 1;
        bool d4 = a.front() >= 3 || a.back() >= 3;
        for (std::size_t i = 1; i + 1 < a.size(); ++i)
                d4 |= a[i] >= 2;
        return {d3, d4};
}

namespace {

// Column order of the printed table: faces 012, 013, 023, 123.
constexpr int COLUMN_FACE[4] = {3, 2, 1, 0};

} // namespace

std::string gluing_table(const Triangulation &t) {
        std::ostringstream os;
        for (int i = 0; i < t.size(); ++i) {
                for (int c = 0; c < 4; ++c) {
                        int f = COLUMN_FACE[c];
                        const auto &g = t.gluing(i, f);
                        if (c)
                                os << "  ";
                        if (g.tet < 0) {
                                os << "bdry   ";
                                continue;
                        }
                        os << g.tet << " (";
                        for (int v = 0; v < 4; ++v)
                                if (v != f)
                                        os << g.perm[v];
                        os << ")";
                }
                os << "\n";
        }
        return os.str();
}

Triangulation parse_gluing_table(const std::string &text) {
        std::istringstream in(text);
        std::string line;
        std::vector<std::vector<std::string>> rows;
        while (std::getline(in, line)) {
                std::istringstream ls(line);
                std::vector<std::string> tok;
                std::string s;
                while (ls >> s)
                        tok.push_back(s);
                if (tok.empty())
                        continue;
                if (tok.size() != 8)
                        throw std::invalid_argument("gluing table row needs 8 tokens: " + line);
                rows.push_back(tok);
        }
        Triangulation t(int(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
                for (int c = 0; c < 4; ++c) {
                        int f = COLUMN_FACE[c];
                        int dst = std::stoi(rows[i][std::size_t(2 * c)]);
                        std::string img = rows[i][std::size_t(2 * c + 1)];
                        if (img.size() != 5 || img.front() != '(' || img.back() != ')')
                                throw std::invalid_argument("bad face image " + img);
                        std::array<int, 4> m{-1, -1, -1, -1};
                        unsigned used = 0;
                        int k = 1;
                        for (int v = 0; v < 4; ++v)
                                if (v != f) {
                                        m[std::size_t(v)] = img[std::size_t(k++)] - '0';
                                        if (m[std::size_t(v)] < 0 || m[std::size_t(v)] > 3)
                                                throw std::invalid_argument("bad face image " + img);
                                        used |= 1u << m[std::size_t(v)];
                                }
                        for (int x = 0; x < 4; ++x)
                                if (!(used >> x & 1))
                                        m[std::size_t(f)] = x;
                        Perm4 p(m[0], m[1], m[2], m[3]);
                        if (!p.valid())
                                throw std::invalid_argument("bad face image " + img);
                        if (dst < 0 || dst >= t.size())
                                throw std::invalid_argument("tetrahedron index out of range");
                        if (t.glued(int(i), f)) {
                                const auto &g = t.gluing(int(i), f);
                                if (g.tet != dst || !(g.perm == p))
                                        throw std::invalid_argument("inconsistent gluing table");
                                continue;
                        }
                        t.join(int(i), f, dst, p);
                }
        return t;
}

} // namespace twobridge
