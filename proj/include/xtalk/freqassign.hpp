#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xtalk/crosstalk.hpp"
#include "xtalk/device.hpp"

namespace xtalk {

/// Concrete frequencies for a coloring, plus the separation the solver
/// certified. For all distinct colors i, j:
///   |w_i - w_j| >= delta  and  |w_i + alpha - w_j| >= delta.
/// Colors with higher multiplicity map to higher frequencies.
struct FrequencyAssignment {
    std::vector<double> omega_of_color;
    double delta = 0.0;
    double omega_lo = 0.0;
    double omega_hi = 0.0;
};

/// Feasibility oracle for the separation constraint system: returns some
/// satisfying placement of n_colors frequencies in [omega_lo, omega_hi] at
/// separation delta, or nothing. Tries uniform spacings first, then an
/// exhaustive grid search at resolution delta/8 for small color counts.
std::optional<std::vector<double>> feasible(int n_colors, double delta, double alpha,
                                            double omega_lo, double omega_hi);

/// Maximizes delta by binary search over [0, region width] and maps colors
/// to frequencies so that multiplicity order matches frequency order
/// (most-used color highest). Empty coloring yields an empty assignment
/// with delta = region width.
FrequencyAssignment smt_find(const Coloring& coloring, double alpha, double omega_lo,
                             double omega_hi, double tolerance = 1e-3);

/// Parking frequencies: smt_find over the parking region. A mesh (2-color)
/// connectivity coloring yields the two-value checkerboard.
FrequencyAssignment assign_idle(const Coloring& conn_coloring, const FrequencyPartition& partition,
                                double alpha);

/// Re-checks every FrequencyAssignment invariant; returns violations.
std::vector<std::string> validate_assignment(const FrequencyAssignment& a, const Coloring& c,
                                             double alpha);

}  // namespace xtalk
