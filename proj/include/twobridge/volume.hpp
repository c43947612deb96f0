#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/angles.hpp"

namespace twobridge {

// Lambda(x) = -int_0^x log|2 sin u| du.
double lobachevsky(double theta);
// d/dx Lambda(x) = -log|2 sin x|.
double lobachevsky_derivative(double theta);
double v3();

double tet_volume(const Triple &angles_over_pi);
double tet_volume(double a, double b, double c);
double shape_ratio(const std::string &shape); // Vol(shape) / v3

// Sum over tetrahedra; the three opposite-edge pairs are read from edges 0, 1, 2.
double volume_functional(const EdgeAngles &angles);
double volume_functional(const std::vector<std::array<double, 3>> &angles);
// Both tetrahedra of every layer carry the layer triple.
double assignment_volume(const AngleAssignment &a);

struct MaximizeOptions {
        double tolerance = 1e-8; // on the projected gradient norm
        int max_iters = 200;
};

struct MaximizeResult {
        // angles[tet][m]: angle on the pair of opposite edges in matching m.
        std::vector<std::array<double, 3>> angles;
        double volume = 0;
        double gradient_norm = 0;
        int iterations = 0;
        bool converged = false;
        bool on_boundary = false; // some angle collapsed towards 0 or pi
        double seed_volume = 0;
};

// Concave maximization of the volume functional over the angle structures
// of t. The seed, when given, must be an angle structure of t.
MaximizeResult maximize_volume(const Triangulation &t, const std::optional<EdgeAngles> &seed = std::nullopt,
                               const MaximizeOptions &opt = {});

// Closed-form ratios from the case analysis of the 0.8 bound; block
// parameters as named there.
struct TheoremRatio {
        std::string label;
        double published;
        double computed;
};
std::vector<TheoremRatio> theorem_ratios();

// Constants of the additive bound, recomputed from shape volumes.
struct CorollaryConstants {
        double volume_slope;     // V(Theta*) / v3 = slope * C + intercept
        double volume_intercept;
        double deficit_slope;    // (V(Phi*) - V(Theta*)) / v3 = slope * C + intercept
        double deficit_intercept;
        double lower_slope;      // c(M) >= 2n + 1 + (slope * C + offset)
        double lower_offset;
};
CorollaryConstants corollary_constants();

struct BoundsReport {
        Word word;
        int tet_count = 0;
        bool theorem_family = false;
        int n_inner = 0, C = 0, n_full = 0;
        std::optional<double> explicit_volume;
        std::optional<double> lower_mult;      // explicit_volume / v3
        std::optional<double> maximized_volume;
        std::optional<double> lower_maximized; // maximized_volume / v3
        std::optional<double> lower_additive;
        std::optional<double> upper_additive;
        int ishikawa_nemoto = 0;
        double petronio_vesnin = 0;
        double best_lower = 0;
        int best_upper = 0;
        std::optional<bool> crossover; // C >= 0.628 n - 0.325
};
BoundsReport bounds_report(const Word &w, bool maximize = true, const MaximizeOptions &opt = {});

} // namespace twobridge
