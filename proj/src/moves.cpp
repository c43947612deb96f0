#include "twobridge/moves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "twobridge/isosig.hpp"

namespace twobridge {

bool EdgeWalk::distinct_tets() const {
        auto s = tets;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
}

EdgeWalk walk_edge(const Triangulation &t, const EdgeClassTable &ec, int c) {
        if (c < 0 || c >= int(ec.classes.size()))
                throw std::invalid_argument("no such edge class");
        const auto &cls = ec.classes[std::size_t(c)];
        auto first = cls.embeddings.front();
        int a = EDGE_VERTS[first.edge][0], b = EDGE_VERTS[first.edge][1];
        int others[2], k = 0;
        for (int x = 0; x < 4; ++x)
                if (x != a && x != b)
                        others[k++] = x;
        EdgeWalk w;
        int tet = first.tet;
        Perm4 v(a, b, others[0], others[1]);
        for (int step = 0; step < cls.degree(); ++step) {
                w.tets.push_back(tet);
                w.verts.push_back(v);
                const auto &g = t.gluing(tet, v[2]);
                if (g.tet < 0)
                        throw std::invalid_argument("edge meets the boundary");
                v = Perm4(g.perm[v[0]], g.perm[v[1]], g.perm[v[3]], g.perm[v[2]]);
                tet = g.tet;
        }
        return w;
}

namespace {

// Replace a ball made of `old_tets` by `new_tets`. Vertices of every old and
// new tetrahedron carry labels; faces are matched by their label sets.
struct Ball {
        std::vector<int> old_tets;
        std::vector<std::array<int, 4>> old_labels;
        std::vector<std::array<int, 4>> new_tets;
};

unsigned face_mask(const std::array<int, 4> &labels, int f) {
        unsigned m = 0;
        for (int v = 0; v < 4; ++v)
                if (v != f)
                        m |= 1u << labels[std::size_t(v)];
        return m;
}

// Vertices of `a` -> vertices of `b` with the same label; the one label of
// `a` missing from `b` goes to the leftover vertex of `b`.
Perm4 match_labels(const std::array<int, 4> &a, const std::array<int, 4> &b) {
        int img[4], missing = -1;
        bool used[4] = {false, false, false, false};
        for (int v = 0; v < 4; ++v) {
                auto it = std::find(b.begin(), b.end(), a[std::size_t(v)]);
                if (it == b.end()) {
                        missing = v;
                        continue;
                }
                img[v] = int(it - b.begin());
                used[img[v]] = true;
        }
        if (missing >= 0)
                img[missing] = int(std::find(used, used + 4, false) - used);
        return Perm4(img[0], img[1], img[2], img[3]);
}

Triangulation retriangulate(const Triangulation &t, const Ball &ball) {
        int n = t.size();
        std::vector<int> slot(std::size_t(n), -1), old_pos(std::size_t(n), -1);
        for (std::size_t k = 0; k < ball.old_tets.size(); ++k)
                old_pos[std::size_t(ball.old_tets[k])] = int(k);
        int kept = 0;
        for (int i = 0; i < n; ++i)
                if (old_pos[std::size_t(i)] < 0)
                        slot[std::size_t(i)] = kept++;
        int m = int(ball.new_tets.size());
        Triangulation r(kept + m);

        for (int i = 0; i < n; ++i) {
                if (old_pos[std::size_t(i)] >= 0)
                        continue;
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0 || old_pos[std::size_t(g.tet)] >= 0)
                                continue;
                        if (!r.glued(slot[std::size_t(i)], f))
                                r.join(slot[std::size_t(i)], f, slot[std::size_t(g.tet)], g.perm);
                }
        }

        std::map<unsigned, std::vector<std::pair<int, int>>> new_faces, old_faces;
        for (int j = 0; j < m; ++j)
                for (int f = 0; f < 4; ++f)
                        new_faces[face_mask(ball.new_tets[std::size_t(j)], f)].push_back({j, f});
        for (std::size_t k = 0; k < ball.old_tets.size(); ++k)
                for (int f = 0; f < 4; ++f)
                        old_faces[face_mask(ball.old_labels[k], f)].push_back({int(k), f});

        // new tet j vertex -> vertex of old tet k with the same label
        auto to_old = [&](int j, int k) {
                return match_labels(ball.new_tets[std::size_t(j)], ball.old_labels[std::size_t(k)]);
        };
        auto fail = [](const char *why) { throw std::invalid_argument(std::string("move not applicable: ") + why); };

        for (int j = 0; j < m; ++j)
                for (int f = 0; f < 4; ++f) {
                        int nj = kept + j;
                        if (r.glued(nj, f))
                                continue;
                        unsigned mask = face_mask(ball.new_tets[std::size_t(j)], f);
                        const auto &nf = new_faces[mask];
                        if (nf.size() == 2) {
                                auto [j2, f2] = nf[0].first == j && nf[0].second == f ? nf[1] : nf[0];
                                r.join(nj, f, kept + j2,
                                       match_labels(ball.new_tets[std::size_t(j)], ball.new_tets[std::size_t(j2)]));
                                continue;
                        }
                        const auto &of = old_faces[mask];
                        if (nf.size() != 1 || of.size() != 1)
                                fail("faces of the ball are not distinct");
                        auto [k, fo] = of[0];
                        Perm4 mx = to_old(j, k);
                        int oldtet = ball.old_tets[std::size_t(k)];
                        const auto &g = t.gluing(oldtet, fo);
                        if (g.tet < 0)
                                continue;
                        if (old_pos[std::size_t(g.tet)] < 0) {
                                r.join(nj, f, slot[std::size_t(g.tet)], g.perm * mx);
                                continue;
                        }
                        int k2 = old_pos[std::size_t(g.tet)];
                        unsigned mask2 = face_mask(ball.old_labels[std::size_t(k2)], g.perm[fo]);
                        const auto &nf2 = new_faces[mask2];
                        if (nf2.size() != 1)
                                fail("ball is glued to its own interior");
                        auto [j2, f2] = nf2[0];
                        if (j2 == j && f2 == f)
                                fail("a face would be glued to itself");
                        Perm4 my = to_old(j2, k2);
                        r.join(nj, f, kept + j2, my.inverse() * g.perm * mx);
                }
        return r;
}

// Labels: the edge ends are 0 and 1, the equator vertices 2, 3, ...
std::vector<std::array<int, 4>> walk_labels(const EdgeWalk &w) {
        int d = int(w.tets.size());
        std::vector<std::array<int, 4>> out;
        for (int k = 0; k < d; ++k) {
                std::array<int, 4> l{};
                const auto &v = w.verts[std::size_t(k)];
                l[std::size_t(v[0])] = 0;
                l[std::size_t(v[1])] = 1;
                l[std::size_t(v[2])] = 2 + (k + d - 1) % d;
                l[std::size_t(v[3])] = 2 + k;
                out.push_back(l);
        }
        return out;
}

} // namespace

bool can_32(const Triangulation &t, const EdgeClassTable &ec, int c) {
        if (ec.classes[std::size_t(c)].degree() != 3)
                return false;
        try {
                pachner_32(t, c);
                return true;
        } catch (const std::invalid_argument &) {
                return false;
        }
}

bool can_44(const Triangulation &t, const EdgeClassTable &ec, int c) {
        if (ec.classes[std::size_t(c)].degree() != 4)
                return false;
        try {
                move_44(t, c, 0);
                return true;
        } catch (const std::invalid_argument &) {
                return false;
        }
}

Triangulation pachner_32(const Triangulation &t, int c) {
        auto ec = edge_classes(t);
        if (c < 0 || c >= int(ec.classes.size()))
                throw std::invalid_argument("no such edge class");
        if (ec.classes[std::size_t(c)].degree() != 3)
                throw std::invalid_argument("3-2 move needs an edge of degree 3");
        auto w = walk_edge(t, ec, c);
        if (!w.distinct_tets())
                throw std::invalid_argument("3-2 move needs three distinct tetrahedra around the edge");
        Ball b{w.tets, walk_labels(w), {{0, 2, 3, 4}, {1, 2, 3, 4}}};
        return retriangulate(t, b);
}

Triangulation pachner_23(const Triangulation &t, int tet, int face) {
        if (tet < 0 || tet >= t.size() || face < 0 || face > 3)
                throw std::invalid_argument("no such face");
        const auto &g = t.gluing(tet, face);
        if (g.tet < 0)
                throw std::invalid_argument("face is on the boundary");
        if (g.tet == tet)
                throw std::invalid_argument("2-3 move needs two distinct tetrahedra");
        std::array<int, 4> l0{}, l1{};
        l0[std::size_t(face)] = 0;
        l1[std::size_t(g.perm[face])] = 1;
        int k = 2;
        for (int v = 0; v < 4; ++v)
                if (v != face) {
                        l0[std::size_t(v)] = k;
                        l1[std::size_t(g.perm[v])] = k;
                        ++k;
                }
        Ball b{{tet, g.tet}, {l0, l1}, {{0, 1, 2, 3}, {0, 1, 3, 4}, {0, 1, 4, 2}}};
        return retriangulate(t, b);
}

Triangulation move_44(const Triangulation &t, int c, int axis) {
        if (axis != 0 && axis != 1)
                throw std::invalid_argument("axis must be 0 or 1");
        auto ec = edge_classes(t);
        if (c < 0 || c >= int(ec.classes.size()))
                throw std::invalid_argument("no such edge class");
        if (ec.classes[std::size_t(c)].degree() != 4)
                throw std::invalid_argument("4-4 move needs an edge of degree 4");
        auto w = walk_edge(t, ec, c);
        if (!w.distinct_tets())
                throw std::invalid_argument("4-4 move needs four distinct tetrahedra around the edge");
        auto y = [&](int k) { return 2 + (axis + k) % 4; };
        Ball b{w.tets,
               walk_labels(w),
               {{y(0), y(2), 0, y(1)}, {y(0), y(2), y(1), 1}, {y(0), y(2), 1, y(3)}, {y(0), y(2), y(3), 0}}};
        return retriangulate(t, b);
}

SimplificationTrace simplify(const Triangulation &t) {
        SimplificationTrace trace;
        Triangulation cur = t;
        while (true) {
                auto ec = edge_classes(cur);
                bool moved = false;
                for (int c = 0; c < int(ec.classes.size()) && !moved; ++c)
                        if (can_32(cur, ec, c)) {
                                cur = pachner_32(cur, c);
                                trace.moves.push_back({"3-2", c, -1, cur.size()});
                                moved = true;
                        }
                if (moved)
                        continue;

                struct Branch {
                        int edge, axis, follow;
                        Triangulation after44;
                };
                std::vector<Branch> branches;
                for (int c = 0; c < int(ec.classes.size()); ++c) {
                        if (!can_44(cur, ec, c))
                                continue;
                        for (int axis = 0; axis < 2; ++axis) {
                                Triangulation next = move_44(cur, c, axis);
                                auto ec2 = edge_classes(next);
                                for (int c2 = 0; c2 < int(ec2.classes.size()); ++c2)
                                        if (can_32(next, ec2, c2)) {
                                                branches.push_back({c, axis, c2, next});
                                                break;
                                        }
                        }
                }
                if (branches.empty())
                        break;
                const auto &pick = branches.front();
                Triangulation reduced = pachner_32(pick.after44, pick.follow);
                bool agree = true;
                std::string sig = encode_isosig(reduced);
                for (std::size_t i = 1; i < branches.size() && agree; ++i)
                        agree = encode_isosig(pachner_32(branches[i].after44, branches[i].follow)) == sig;
                MoveRecord rec{"4-4", pick.edge, pick.axis, pick.after44.size()};
                rec.branches = int(branches.size());
                rec.branches_agree = agree;
                trace.moves.push_back(rec);
                trace.moves.push_back({"3-2", pick.follow, -1, reduced.size()});
                cur = std::move(reduced);
        }
        trace.result = std::move(cur);
        return trace;
}

} // namespace twobridge
