#include "twobridge/json.hpp"

#include <cstdio>

#include "twobridge/isosig.hpp"

namespace twobridge {

using nlohmann::json;

namespace {

json opt(const std::optional<double> &x) { return x ? json(*x) : json(nullptr); }

std::string fixed(double x, int digits = 6) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", digits, x);
        return buf;
}

std::string fixed(const std::optional<double> &x) { return x ? fixed(*x) : ""; }

} // namespace

json to_json(const Word &w) {
        json syl = json::array();
        for (const auto &s : w.syllables())
                syl.push_back({std::string(1, s.letter), s.exponent});
        return {{"word", render(w)}, {"syllables", syl}, {"n", w.n()}, {"ell", w.ell()}};
}

json to_json(const Triangulation &t) {
        json tets = json::array();
        for (int i = 0; i < t.size(); ++i) {
                json faces = json::array();
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0)
                                faces.push_back(nullptr);
                        else
                                faces.push_back({{"tet", g.tet}, {"face", g.perm[f]}, {"perm", g.perm.str()}});
                }
                tets.push_back(faces);
        }
        json j{{"tetrahedra", t.size()}, {"gluings", tets}};
        if (t.has_layers())
                j["layer_of"] = t.layer_of;
        return j;
}

Triangulation triangulation_from_json(const json &j) {
        const auto &g = j.at("gluings");
        Triangulation t(int(g.size()));
        for (int i = 0; i < t.size(); ++i) {
                const auto &faces = g.at(std::size_t(i));
                if (faces.size() != 4)
                        throw std::invalid_argument("each tetrahedron needs four face entries");
                for (int f = 0; f < 4; ++f) {
                        const auto &x = faces.at(std::size_t(f));
                        if (x.is_null() || t.glued(i, f))
                                continue;
                        int u = x.at("tet").get<int>();
                        if (u < 0 || u >= t.size())
                                throw std::invalid_argument("gluing to a missing tetrahedron");
                        t.join(i, f, u, Perm4::parse(x.at("perm").get<std::string>()));
                }
        }
        return t;
}

json to_json(const EdgeClassTable &ec, const Triangulation &t) {
        json classes = json::array();
        for (std::size_t c = 0; c < ec.classes.size(); ++c) {
                json emb = json::array();
                for (const auto &e : ec.classes[c].embeddings) {
                        json x{{"tet", e.tet}, {"edge", e.edge}};
                        if (t.has_layers())
                                x["role"] = role_name(edge_role(t, e.tet, e.edge));
                        emb.push_back(x);
                }
                classes.push_back({{"id", c}, {"degree", ec.classes[c].degree()}, {"embeddings", emb}});
        }
        return classes;
}

json to_json(const ValidationReport &r) {
        return {{"ok", r.ok()},
                {"involution", r.involution},
                {"all_faces_glued", r.all_faces_glued},
                {"no_self_gluing", r.no_self_gluing},
                {"edge_count_matches", r.edge_count_matches},
                {"vertex_links_torus", r.vertex_links_torus},
                {"edge_classes", r.edge_class_count},
                {"vertices", r.vertex_count},
                {"link_euler", r.link_euler},
                {"failures", r.failures}};
}

json to_json(const SimplificationTrace &tr) {
        json moves = json::array();
        for (const auto &m : tr.moves) {
                json x{{"move", m.move}, {"target", m.target}, {"axis", m.axis < 0 ? json(nullptr) : json(m.axis)},
                       {"tets_after", m.tets_after}};
                if (m.move == "4-4") {
                        x["branches"] = m.branches;
                        x["branches_agree"] = m.branches_agree;
                }
                moves.push_back(x);
        }
        return {{"moves", moves}, {"tetrahedra", tr.result.size()}, {"isosig", encode_isosig(tr.result)}};
}

json to_json(const BlockDecomposition &d) {
        json blocks = json::array();
        for (const auto &b : d.blocks) {
                json x{{"kind", block_kind_name(b.kind)}, {"span", {b.start, b.end}}, {"m", b.m}, {"p", b.p}, {"k", b.k}};
                if (!b.runs.empty())
                        x["runs"] = b.runs;
                blocks.push_back(x);
        }
        return {{"blocks", blocks}, {"ends_with_unfinished_B3", d.ends_with_unfinished_B3}, {"is_all_B2", d.is_all_B2}};
}

json to_json(const AngleAssignment &a) {
        json layers = json::array();
        for (std::size_t i = 0; i < a.layers.size(); ++i) {
                const auto &l = a.layers[i];
                layers.push_back({{"layer", i},
                                  {"shape", l.shape},
                                  {"triple", {format_pi(l.theta[0]), format_pi(l.theta[1]), format_pi(l.theta[2])}},
                                  {"volume", tet_volume(l.theta)}});
        }
        return layers;
}

json to_json(const AngleVerification &v) {
        json sums = json::array();
        for (const auto &s : v.class_sums)
                sums.push_back(format_pi(s));
        return {{"ok", v.ok()},           {"positive", v.positive},   {"opposite_equal", v.opposite_equal},
                {"tet_sums", v.tet_sums}, {"edge_sums", v.edge_sums}, {"class_sums", sums},
                {"bad_classes", v.bad_classes}, {"failures", v.failures}};
}

json to_json(const MaximizeResult &m) {
        return {{"volume", m.volume},
                {"seed_volume", m.seed_volume},
                {"gradient_norm", m.gradient_norm},
                {"iterations", m.iterations},
                {"converged", m.converged},
                {"on_boundary", m.on_boundary},
                {"angles", m.angles}};
}

json to_json(const BoundsReport &r) {
        json j{{"word", render(r.word)},
               {"tet_count", r.tet_count},
               {"theorem_family", r.theorem_family},
               {"n_full", r.n_full},
               {"explicit_volume", opt(r.explicit_volume)},
               {"lower_mult", opt(r.lower_mult)},
               {"maximized_volume", opt(r.maximized_volume)},
               {"lower_maximized", opt(r.lower_maximized)},
               {"lower_additive", opt(r.lower_additive)},
               {"upper_additive", opt(r.upper_additive)},
               {"ishikawa_nemoto", r.ishikawa_nemoto},
               {"petronio_vesnin", r.petronio_vesnin},
               {"best_lower", r.best_lower},
               {"best_upper", r.best_upper}};
        if (r.theorem_family) {
                j["n_inner"] = r.n_inner;
                j["C"] = r.C;
                j["crossover"] = *r.crossover;
        }
        return j;
}

std::string bounds_csv_header() {
        return "word,tet_count,n_inner,C,explicit_volume,lower_mult,maximized_volume,lower_additive,upper_additive,"
               "ishikawa_nemoto,petronio_vesnin,best_lower,best_upper,crossover";
}

std::string bounds_csv_row(const BoundsReport &r) {
        std::string s = render(r.word) + "," + std::to_string(r.tet_count) + ",";
        s += r.theorem_family ? std::to_string(r.n_inner) + "," + std::to_string(r.C) : ",";
        s += "," + fixed(r.explicit_volume) + "," + fixed(r.lower_mult) + "," + fixed(r.maximized_volume) + "," +
             fixed(r.lower_additive) + "," + fixed(r.upper_additive);
        s += "," + std::to_string(r.ishikawa_nemoto) + "," + fixed(r.petronio_vesnin, 4) + "," + fixed(r.best_lower) +
             "," + std::to_string(r.best_upper) + ",";
        if (r.crossover)
                s += *r.crossover ? "1" : "0";
        return s;
}

} // namespace twobridge
