#include "twobridge/angles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twobridge {

namespace {

using R = Rational;
constexpr Triple tri(long long a, long long b, long long c, long long d, long long e, long long f) {
        return {R(a, b), R(c, d), R(e, f)};
}

// Layer triples in the coordinates of the previous letter: position 0 is the
// pair the previous letter made vertical (R) or horizontal (L).
const Triple S0 = tri(1, 3, 1, 3, 1, 3);
const Triple I_ = tri(7, 24, 3, 8, 1, 3);
const Triple II = tri(1, 4, 5, 12, 1, 3);
const Triple IIIa = tri(1, 2, 1, 4, 1, 4);
const Triple IIIb = tri(1, 4, 1, 4, 1, 2);
const Triple IIIc = tri(1, 4, 1, 2, 1, 4);
const Triple IV = tri(5, 24, 7, 24, 1, 2);
const Triple VI = tri(7, 12, 1, 6, 1, 4);
const Triple VIII = tri(5, 8, 1, 8, 1, 4);
const Triple IX = tri(7, 12, 1, 12, 1, 3);
const Triple Va = tri(1, 3, 1, 6, 1, 2);
const Triple Vb = tri(1, 2, 1, 3, 1, 6);
const Triple Vc = tri(1, 2, 1, 6, 1, 3);
const Triple V_END = tri(1, 6, 1, 2, 1, 3);
const Triple VII_END = tri(3, 8, 1, 8, 1, 2);
const Triple VIII_END = tri(1, 8, 5, 8, 1, 4);
// First layer, absolute coordinates.
const Triple V_FIRST = tri(1, 6, 1, 2, 1, 3);
const Triple VII_FIRST = tri(1, 8, 3, 8, 1, 2);

Triple sorted(Triple t) {
        std::sort(t.begin(), t.end());
        return t;
}

} // namespace

std::string format_pi(const Rational &r) {
        if (r == Rational(0))
                return "0";
        std::string s = std::to_string(r.numerator());
        if (r.denominator() != 1)
                s += "/" + std::to_string(r.denominator());
        return s + " π";
}

const std::vector<Shape> &shape_catalog() {
        static const std::vector<Shape> cat = {
            {"0", tri(1, 3, 1, 3, 1, 3)},     {"I", tri(1, 3, 3, 8, 7, 24)},   {"II", tri(1, 3, 1, 4, 5, 12)},
            {"III", tri(1, 4, 1, 4, 1, 2)},   {"IV", tri(5, 24, 7, 24, 1, 2)}, {"V", tri(1, 6, 1, 2, 1, 3)},
            {"VI", tri(1, 6, 1, 4, 7, 12)},   {"VII", tri(1, 8, 3, 8, 1, 2)},  {"VIII", tri(1, 8, 1, 4, 5, 8)},
            {"IX", tri(1, 12, 7, 12, 1, 3)},  {"X2", tri(2, 3, 1, 6, 1, 6)},
        };
        return cat;
}

const Shape &shape_by_name(const std::string &name) {
        for (const auto &s : shape_catalog())
                if (s.name == name)
                        return s;
        throw std::invalid_argument("unknown shape " + name);
}

std::optional<std::string> classify(const Triple &t) {
        auto st = sorted(t);
        for (const auto &s : shape_catalog())
                if (sorted(s.angles) == st)
                        return s.name;
        return std::nullopt;
}

bool in_theorem_family(const Word &w) {
        const auto &s = w.syllables();
        if (s.size() < 3 || s.front().letter != 'R' || s.front().exponent != 1 || s.back().exponent != 1)
                return false;
        for (std::size_t i = 1; i + 1 < s.size(); ++i)
                if (s[i].exponent != 1 && s[i].exponent != 2)
                        return false;
        return true;
}

AngleAssignment assign_angles(const Word &w) { return assign_angles(w, decompose(inner_word(w))); }

AngleAssignment assign_angles(const Word &w, const BlockDecomposition &d) {
        if (!in_theorem_family(w))
                throw std::invalid_argument("word is not of the form R L^a1 ... with inner exponents in {1,2} and a "
                                            "single terminal letter");
        std::vector<int> a = inner_word(w).exponents();
        int n = int(a.size());
        if (d.blocks.empty() || d.blocks.front().start != 0 || d.blocks.back().end != n - 1)
                throw std::invalid_argument("decomposition does not match the word");
        for (std::size_t i = 1; i < d.blocks.size(); ++i)
                if (d.blocks[i].start != d.blocks[i - 1].end + 1)
                        throw std::invalid_argument("decomposition does not match the word");
        auto off = syllable_offsets(a);
        int letters = off.back() + a.back();
        std::string word = w.letters();
        AngleAssignment out;

        auto finish = [&](const Triple &first, const std::vector<Triple> &sh) {
                out.layers.push_back({first, *classify(first)});
                for (int j = 1; j <= letters; ++j) {
                        Triple t = sh[std::size_t(j - 1)];
                        if (word[std::size_t(j - 1)] == 'L')
                                std::swap(t[0], t[1]);
                        out.layers.push_back({t, *classify(t)});
                }
                return out;
        };

        if (d.is_all_B2) {
                if (n == 1) {
                        // The better of the two structures available for RL^2R.
                        for (const auto &t : {tri(1, 4, 5, 12, 1, 3), tri(2, 3, 1, 6, 1, 6), tri(1, 4, 5, 12, 1, 3)})
                                out.layers.push_back({t, *classify(t)});
                        return out;
                }
                std::vector<Triple> sh(static_cast<std::size_t>(letters));
                for (int s = 0; s < n; ++s) {
                        sh[std::size_t(off[std::size_t(s)])] = IIIa;
                        sh[std::size_t(off[std::size_t(s)] + 1)] = IIIb;
                }
                sh.back() = VII_END;
                return finish(VII_FIRST, sh);
        }

        std::vector<Triple> sh(std::size_t(letters), S0);
        auto at = [&](int syl, int pos) -> Triple & { return sh[std::size_t(off[std::size_t(syl)] + pos)]; };
        bool b2_start = false, b2_end = false;
        BlockKind last_kind = d.blocks.back().kind;
        for (const auto &b : d.blocks) {
                switch (b.kind) {
                case BlockKind::B1:
                        break;
                case BlockKind::B2_start:
                        b2_start = true;
                        for (int s = b.start; s <= b.end; ++s) {
                                at(s, 0) = IIIa;
                                at(s, 1) = IIIb;
                        }
                        at(b.end, 0) = VI;
                        at(b.end, 1) = I_;
                        break;
                case BlockKind::B2_end: {
                        b2_end = true;
                        std::vector<Triple> seq{IX};
                        for (int i = 0; i < b.k - 2; ++i) {
                                seq.push_back(IIIb);
                                seq.push_back(Vc);
                        }
                        seq.insert(seq.end(), {Va, Vb, Va});
                        for (std::size_t i = 0; i < seq.size(); ++i)
                                sh[std::size_t(off[std::size_t(b.start)]) + i] = seq[i];
                        break;
                }
                case BlockKind::B3:
                case BlockKind::UnfinishedB3: {
                        at(b.start, 0) = I_;
                        int s = b.start + 1;
                        for (std::size_t r = 0; r < b.runs.size(); ++r) {
                                if (r > 0) {
                                        at(s, 0) = IIIc;
                                        ++s;
                                }
                                for (int i = 0; i < b.runs[r]; ++i, ++s) {
                                        at(s, 0) = i > 0 ? IIIa : (r == 0 ? VI : VIII);
                                        at(s, 1) = IIIb;
                                }
                        }
                        if (b.kind == BlockKind::UnfinishedB3) {
                                sh.back() = VII_END;
                        } else {
                                at(s - 1, 1) = IV;
                                at(s, 0) = II;
                        }
                        break;
                }
                case BlockKind::AllB2:
                        throw std::invalid_argument("AllB2 block inside a mixed decomposition");
                }
        }
        // Closing layer when the word ends with a single letter.
        if (!b2_end && a.back() == 1) {
                if (last_kind == BlockKind::B3) {
                        sh[std::size_t(letters - 2)] = IIIb;
                        sh[std::size_t(letters - 1)] = VIII_END;
                } else {
                        sh[std::size_t(letters - 1)] = V_END;
                }
        }
        return finish(b2_start ? VII_FIRST : V_FIRST, sh);
}

EdgeAngles expand_to_tetrahedra(const AngleAssignment &a, const Triangulation &t) {
        if (!t.has_layers())
                throw std::invalid_argument("triangulation carries no layer data");
        if (int(a.layers.size()) != int(t.frames.size()))
                throw std::invalid_argument("assignment and triangulation have different layer counts");
        EdgeAngles out(std::size_t(t.size()));
        for (int i = 0; i < t.size(); ++i) {
                const auto &th = a.layers[std::size_t(t.layer_of[std::size_t(i)])].theta;
                for (int e = 0; e < 6; ++e) {
                        switch (edge_role(t, i, e)) {
                        case Role::horizontal: out[std::size_t(i)][std::size_t(e)] = th[0]; break;
                        case Role::vertical: out[std::size_t(i)][std::size_t(e)] = th[1]; break;
                        case Role::diagonal: out[std::size_t(i)][std::size_t(e)] = th[2]; break;
                        }
                }
        }
        return out;
}

AngleVerification verify_angle_structure(const Triangulation &t, const EdgeAngles &angles) {
        AngleVerification r;
        if (int(angles.size()) != t.size())
                throw std::invalid_argument("angle map does not cover the triangulation");
        for (int i = 0; i < t.size(); ++i) {
                const auto &x = angles[std::size_t(i)];
                for (auto v : x)
                        if (v <= Rational(0) || v >= Rational(1))
                                r.positive = false;
                if (x[0] != x[5] || x[1] != x[4] || x[2] != x[3])
                        r.opposite_equal = false;
                if (x[0] + x[1] + x[2] != Rational(1))
                        r.tet_sums = false;
        }
        if (!r.positive)
                r.failures.push_back("angle outside (0, π)");
        if (!r.opposite_equal)
                r.failures.push_back("opposite edges carry different angles");
        if (!r.tet_sums)
                r.failures.push_back("tetrahedron angle sum differs from π");
        auto ec = edge_classes(t);
        for (std::size_t c = 0; c < ec.classes.size(); ++c) {
                Rational s = 0;
                for (const auto &emb : ec.classes[c].embeddings)
                        s += angles[std::size_t(emb.tet)][std::size_t(emb.edge)];
                r.class_sums.push_back(s);
                if (s != Rational(2)) {
                        r.edge_sums = false;
                        r.bad_classes.push_back(int(c));
                        r.failures.push_back("edge class " + std::to_string(c) + " sums to " + format_pi(s));
                }
        }
        return r;
}

bool RealCheck::ok(double tol) const {
        return max_tet_error <= tol && max_edge_error <= tol && min_angle > 0 && max_angle < 3.14159265358979323846;
}

RealCheck verify_real_angles(const Triangulation &t, const std::vector<std::array<double, 6>> &angles) {
        const double pi = 3.14159265358979323846;
        RealCheck r;
        r.min_angle = pi;
        for (const auto &x : angles) {
                r.max_tet_error = std::max(r.max_tet_error, std::abs(x[0] + x[1] + x[2] - pi));
                for (double v : x) {
                        r.min_angle = std::min(r.min_angle, v);
                        r.max_angle = std::max(r.max_angle, v);
                }
        }
        auto ec = edge_classes(t);
        for (const auto &c : ec.classes) {
                double s = 0;
                for (const auto &emb : c.embeddings)
                        s += angles[std::size_t(emb.tet)][std::size_t(emb.edge)];
                r.max_edge_error = std::max(r.max_edge_error, std::abs(s - 2 * pi));
        }
        return r;
}

std::pair<int, int> block_layers(const Word &w, const Block &b) {
        auto a = inner_word(w).exponents();
        auto off = syllable_offsets(a);
        // Inner letter j (0-based) lives in layer j + 1; layer 0 is the first letter's.
        return {off[std::size_t(b.start)] + 1, off[std::size_t(b.end)] + a[std::size_t(b.end)]};
}

std::array<int, 3> level_classes(const Triangulation &t, const EdgeClassTable &ec, int layer, bool top) {
        static constexpr int MATCH_PAIRS[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
        const auto &m = MATCH_PAIRS[t.frames.at(std::size_t(layer)).diagonal];
        std::array<int, 3> out{-1, -1, -1};
        for (int half = 0; half < 2; ++half) {
                int tet = 2 * layer + half;
                // Tet A (half 0) has its bottom faces opposite m[1], its top faces opposite m[0].
                const int *fs = (half == 0) == top ? m[0] : m[1];
                for (int i = 0; i < 2; ++i)
                        for (int e = 0; e < 6; ++e) {
                                if (EDGE_VERTS[e][0] == fs[i] || EDGE_VERTS[e][1] == fs[i])
                                        continue;
                                int pos = 0;
                                switch (edge_role(t, tet, e)) {
                                case Role::horizontal: pos = 0; break;
                                case Role::vertical: pos = 1; break;
                                case Role::diagonal: pos = 2; break;
                                }
                                if (out[std::size_t(pos)] < 0)
                                        out[std::size_t(pos)] = ec.class_of[std::size_t(tet)][std::size_t(e)];
                        }
        }
        return out;
}

std::pair<DeficitTriple, DeficitTriple> boundary_deficits(const Triangulation &t, const Word &w, const Block &b,
                                                          const AngleAssignment &a) {
        auto [lo, hi] = block_layers(w, b);
        auto angles = expand_to_tetrahedra(a, t);
        auto ec = edge_classes(t);
        auto deficits = [&](int layer, bool top) {
                DeficitTriple d;
                auto cls = level_classes(t, ec, layer, top);
                for (int pos = 0; pos < 3; ++pos) {
                        Rational s = 0;
                        for (const auto &emb : ec.classes[std::size_t(cls[std::size_t(pos)])].embeddings) {
                                int L = t.layer_of[std::size_t(emb.tet)];
                                if (L >= lo && L <= hi)
                                        s += angles[std::size_t(emb.tet)][std::size_t(emb.edge)];
                        }
                        d[std::size_t(pos)] = Rational(2) - s;
                }
                return d;
        };
        return {deficits(lo, false), deficits(hi, true)};
}

} // namespace twobridge
