#include "twobridge/volume.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/special_functions/bernoulli.hpp>

namespace twobridge {

namespace {

constexpr double PI = std::numbers::pi;

double to_double(const Rational &r) { return double(r.numerator()) / double(r.denominator()); }

// Cl2(x) for |x| <= pi from the Bernoulli-number expansion
// Cl2(x) = x - x log|x| + sum_k |B_2k| x^(2k+1) / (2k (2k+1)!).
double clausen2(double x) {
        if (x == 0)
                return 0;
        static const std::vector<double> coef = [] {
                std::vector<double> c;
                double fact = 1; // (2k+1)!
                for (int k = 1; k <= 40; ++k) {
                        fact *= double(2 * k) * double(2 * k + 1);
                        c.push_back(std::abs(boost::math::bernoulli_b2n<double>(k)) / (2.0 * k * fact));
                }
                return c;
        }();
        double s = x - x * std::log(std::abs(x));
        double x2 = x * x, p = x;
        for (double c : coef) {
                p *= x2;
                double term = c * p;
                s += term;
                if (std::abs(term) < 1e-18)
                        break;
        }
        return s;
}

} // namespace

double lobachevsky(double theta) {
        if (!std::isfinite(theta))
                throw std::invalid_argument("non-finite angle");
        double r = theta - PI * std::round(theta / PI);
        return 0.5 * clausen2(2 * r);
}

double lobachevsky_derivative(double theta) { return -std::log(std::abs(2 * std::sin(theta))); }

double v3() { return 3 * lobachevsky(PI / 3); }

double tet_volume(double a, double b, double c) { return lobachevsky(a) + lobachevsky(b) + lobachevsky(c); }

double tet_volume(const Triple &t) { return tet_volume(PI * to_double(t[0]), PI * to_double(t[1]), PI * to_double(t[2])); }

double shape_ratio(const std::string &shape) { return tet_volume(shape_by_name(shape).angles) / v3(); }

double volume_functional(const EdgeAngles &angles) {
        double v = 0;
        for (const auto &x : angles)
                v += tet_volume(PI * to_double(x[0]), PI * to_double(x[1]), PI * to_double(x[2]));
        return v;
}

double volume_functional(const std::vector<std::array<double, 3>> &angles) {
        double v = 0;
        for (const auto &x : angles)
                v += tet_volume(x[0], x[1], x[2]);
        return v;
}

double assignment_volume(const AngleAssignment &a) {
        double v = 0;
        for (const auto &l : a.layers)
                v += 2 * tet_volume(l.theta);
        return v;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Constraints {
        MatrixXd A;
        VectorXd b;
        MatrixXd null; // orthonormal basis of ker A
};

// x[3i + m] is the angle of tet i on the opposite-edge pair of matching m.
Constraints constraints(const Triangulation &t) {
        int n = t.size();
        auto ec = edge_classes(t);
        int rows = n + int(ec.classes.size());
        Constraints c{MatrixXd::Zero(rows, 3 * n), VectorXd::Zero(rows), MatrixXd()};
        for (int i = 0; i < n; ++i) {
                c.A.block(i, 3 * i, 1, 3).setOnes();
                c.b(i) = PI;
        }
        for (std::size_t k = 0; k < ec.classes.size(); ++k) {
                int row = n + int(k);
                for (const auto &emb : ec.classes[k].embeddings)
                        c.A(row, 3 * emb.tet + EDGE_MATCHING[emb.edge]) += 1;
                c.b(row) = 2 * PI;
        }
        Eigen::JacobiSVD<MatrixXd> svd(c.A, Eigen::ComputeFullV);
        svd.setThreshold(1e-10);
        int rank = int(svd.rank());
        c.null = svd.matrixV().rightCols(3 * n - rank);
        return c;
}

// Finds x with A x = b and every angle positive by pushing up the smallest
// angle with a log barrier; throws if the open polytope is empty.
VectorXd interior_point(const Constraints &c, const VectorXd &start) {
        const MatrixXd &N = c.null;
        int d = int(N.cols());
        VectorXd x = start;
        double s = x.minCoeff() - 1;
        for (double mu = 1; mu > 1e-9; mu *= 0.2) {
                for (int it = 0; it < 50; ++it) {
                        VectorXd gap = (x.array() - s).matrix();
                        VectorXd inv = gap.cwiseInverse();
                        VectorXd inv2 = inv.cwiseProduct(inv);
                        // Gradient and Hessian of s + mu * sum log(x_i - s) in (y, s).
                        VectorXd g(d + 1);
                        g.head(d) = mu * N.transpose() * inv;
                        g(d) = 1 - mu * inv.sum();
                        MatrixXd H(d + 1, d + 1);
                        H.topLeftCorner(d, d) = -mu * N.transpose() * inv2.asDiagonal() * N;
                        H.topRightCorner(d, 1) = mu * N.transpose() * inv2;
                        H.bottomLeftCorner(1, d) = H.topRightCorner(d, 1).transpose();
                        H(d, d) = -mu * inv2.sum();
                        VectorXd step = H.ldlt().solve(-g);
                        if (!step.allFinite() || step.dot(g) <= 0)
                                step = g;
                        double tau = 1;
                        for (int ls = 0; ls < 60; ++ls, tau *= 0.5) {
                                VectorXd nx = x + tau * N * step.head(d);
                                double ns = s + tau * step(d);
                                if ((nx.array() - ns).minCoeff() > 0) {
                                        x = nx;
                                        s = ns;
                                        break;
                                }
                        }
                        if (g.norm() < 1e-10)
                                break;
                }
                if (s > 1e-3)
                        return x;
        }
        if (s > 0)
                return x;
        throw std::runtime_error("the triangulation admits no angle structure");
}

} // namespace

MaximizeResult maximize_volume(const Triangulation &t, const std::optional<EdgeAngles> &seed,
                               const MaximizeOptions &opt) {
        int n = t.size();
        if (n == 0)
                throw std::invalid_argument("empty triangulation");
        Constraints c = constraints(t);
        const MatrixXd &N = c.null;
        VectorXd x(3 * n);
        if (seed) {
                if (int(seed->size()) != n)
                        throw std::invalid_argument("seed does not match the triangulation");
                for (int i = 0; i < n; ++i)
                        for (int e = 0; e < 6; ++e)
                                x(3 * i + EDGE_MATCHING[e]) = PI * to_double((*seed)[std::size_t(i)][std::size_t(e)]);
                if ((c.A * x - c.b).norm() > 1e-9 || x.minCoeff() <= 0)
                        throw std::invalid_argument("seed is not an angle structure of the triangulation");
        } else {
                VectorXd centre = VectorXd::Constant(3 * n, PI / 3);
                x = centre - c.A.completeOrthogonalDecomposition().solve(c.A * centre - c.b);
                if ((c.A * x - c.b).norm() > 1e-8)
                        throw std::runtime_error("angle equations are inconsistent");
                if (x.minCoeff() <= 0)
                        x = interior_point(c, x);
        }

        auto value = [&](const VectorXd &v) {
                double s = 0;
                for (int i = 0; i < 3 * n; ++i)
                        s += lobachevsky(v(i));
                return s;
        };
        auto grad = [&](const VectorXd &v) {
                VectorXd g(3 * n);
                for (int i = 0; i < 3 * n; ++i)
                        g(i) = lobachevsky_derivative(v(i));
                return g;
        };

        MaximizeResult r;
        r.seed_volume = value(x);
        double f = r.seed_volume;
        VectorXd pg = N.transpose() * grad(x);
        int it = 0;
        for (; it < opt.max_iters && pg.norm() > opt.tolerance; ++it) {
                VectorXd curv(3 * n);
                for (int i = 0; i < 3 * n; ++i)
                        curv(i) = -1 / std::tan(x(i));
                MatrixXd H = N.transpose() * curv.asDiagonal() * N;
                VectorXd dir = H.ldlt().solve(-pg);
                if (!dir.allFinite() || dir.dot(pg) <= 0)
                        dir = pg;
                VectorXd dx = N * dir;
                double slope = pg.dot(dir), tau = 1;
                bool moved = false;
                for (int ls = 0; ls < 60; ++ls, tau *= 0.5) {
                        VectorXd nx = x + tau * dx;
                        if (nx.minCoeff() <= 0 || nx.maxCoeff() >= PI)
                                continue;
                        double nf = value(nx);
                        // Near the optimum rounding swamps the Armijo test, so
                        // also accept steps that shrink the projected gradient.
                        VectorXd npg = N.transpose() * grad(nx);
                        if (nf >= f + 1e-4 * tau * slope || (nf >= f - 1e-13 && npg.norm() < pg.norm())) {
                                x = nx;
                                f = nf;
                                pg = npg;
                                moved = true;
                                break;
                        }
                }
                if (!moved)
                        break;
        }
        r.iterations = it;
        r.gradient_norm = pg.norm();
        r.converged = r.gradient_norm <= opt.tolerance;
        r.volume = f;
        r.on_boundary = x.minCoeff() < 1e-6;
        r.angles.resize(std::size_t(n));
        for (int i = 0; i < n; ++i)
                for (int m = 0; m < 3; ++m)
                        r.angles[std::size_t(i)][std::size_t(m)] = x(3 * i + m);
        return r;
}

std::vector<TheoremRatio> theorem_ratios() {
        auto v = [](const char *s) { return shape_ratio(s); };
        double I = v("I"), II = v("II"), III = v("III"), IV = v("IV"), V = v("V"), VI = v("VI"), VII = v("VII"),
               VIII = v("VIII"), IX = v("IX"), X2 = v("X2");
        auto b3 = [&](int m) { return V + I + II + IV + VI + 2 * (m - 1) * III + (m - 1) * VIII; };
        auto b2_start = [&](int k) { return 2 * (VII + I + VI + 2 * (k - 1) * III); };
        auto b2_end = [&](int k) { return k == 2 ? 2 * (3 * V + IX) : 2 * (4 * V + IX + (2 * k - 5) * III); };
        auto unfinished = [&](int m) {
                return m == 1 ? 2 * (I + VI + VII) : 2 * (I + VI + (2 * m - 1) * III + (m - 1) * VIII);
        };
        auto all_b2 = [&](int k) { return 2 * ((2 * k - 1) * III + 2 * VII); };
        return {
            {"B2 at start, k1=1", 0.8357, b2_start(1) / (2 * (2 * 1 + 1))},
            {"B3, m1=1", 0.8889, 2 * b3(1) / (2 * (3 * 1 + 2))},
            {"B3 after B2 at start, m2=1", 0.9028, 2 * (b3(1) - V) / (2 * (3 * 1 + 1))},
            {"B2 at end, k3=2", 0.7708, b2_end(2) / 8},
            {"B2 at end, k3=3", 0.8031, b2_end(3) / (4 * 3)},
            {"B3 + B2 at end (k3=2), m1=1", 0.8364, (2 * b3(1) + b2_end(2)) / (2 * (3 * 1 + 6))},
            {"B2 at start + B3 + B2 at end (k3=2), k1=m2=1", 0.8365,
             (b2_start(1) + 2 * (b3(1) - V) + b2_end(2)) / (2 * (2 * 1 + 3 * 1 + 6))},
            {"unfinished B3, m3=2", 0.8582, unfinished(2) / (6 * 2)},
            {"all B2, k=2", 0.8381, all_b2(2) / (2 * (2 * 2 + 1))},
            {"all B2, k=1", 0.7952, all_b2(1) / (2 * (2 * 1 + 1))},
            {"RL^2R with the (II, X2, II) structure", 0.8720, (2 * II + X2) / 3},
        };
}

CorollaryConstants corollary_constants() {
        auto v = [](const char *s) { return shape_ratio(s); };
        double I = v("I"), III = v("III"), V = v("V"), VI = v("VI"), VIII = v("VIII");
        CorollaryConstants k;
        // V(Theta*) = 2 (V + I + VI + (C-1)(2 III + VIII) + III + VIII)
        k.volume_slope = 2 * (2 * III + VIII);
        k.volume_intercept = 2 * (V + I + VI - III);
        // V(Phi*) = 2 (2 V + 3C v3)
        k.deficit_slope = 6 - k.volume_slope;
        k.deficit_intercept = 4 * V - k.volume_intercept;
        // 2 (n + C - 1 + 2V) - deficit = 2n + 1 + (lower_slope C + lower_offset)
        k.lower_slope = 2 - k.deficit_slope;
        k.lower_offset = -2 + 4 * V - k.deficit_intercept - 1;
        return k;
}

BoundsReport bounds_report(const Word &w, bool maximize, const MaximizeOptions &opt) {
        BoundsReport r;
        r.word = w;
        r.tet_count = 2 * (w.ell() - 1);
        r.n_full = w.n();
        int sum = 0, ones = 0;
        for (const auto &s : w.syllables()) {
                sum += s.exponent;
                ones += s.exponent == 1;
        }
        r.ishikawa_nemoto = sum + 2 * (w.n() - 1) - ones;
        r.theorem_family = in_theorem_family(w);
        int n_pv = r.n_full;
        r.best_upper = std::min(r.tet_count, r.ishikawa_nemoto);
        if (r.theorem_family) {
                auto inner = inner_word(w);
                r.n_inner = inner.n();
                r.C = inner.ell() - inner.n();
                n_pv = r.n_inner;
                auto a = assign_angles(w);
                r.explicit_volume = assignment_volume(a);
                r.lower_mult = *r.explicit_volume / v3();
                r.lower_additive = 2 * r.n_inner + 1 + (0.9632 * r.C + 0.393);
                r.upper_additive = 2 * r.n_inner + 1 + (2 * r.C + 1);
                r.crossover = r.C >= 0.628 * r.n_inner - 0.325;
                if (maximize) {
                        auto t = build_sakuma_weeks(w);
                        auto m = maximize_volume(t, expand_to_tetrahedra(a, t), opt);
                        r.maximized_volume = m.volume;
                        r.lower_maximized = m.volume / v3();
                }
        }
        r.petronio_vesnin = std::max(2.0, 2 * n_pv - 2.6667);
        r.best_lower = r.petronio_vesnin;
        for (const auto &b : {r.lower_mult, r.lower_maximized})
                if (b)
                        r.best_lower = std::max(r.best_lower, *b);
        // The additive bound is only claimed for C >= 1.
        if (r.lower_additive && r.C >= 1)
                r.best_lower = std::max(r.best_lower, *r.lower_additive);
        return r;
}

} // namespace twobridge
