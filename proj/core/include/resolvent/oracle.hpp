#pragma once

#include <optional>
#include <vector>

#include "resolvent/rational.hpp"

namespace resolvent {

struct RootEstimate {
    Complex value{0.0, 0.0};
    double residual = 0.0;  // |p(value)|, recomputed from value
    std::optional<int> branch_id;
    std::optional<double> oracle_distance;
};

struct AberthResult {
    std::vector<RootEstimate> roots;
    bool converged = false;
    int sweeps = 0;
    double worst_residual = 0.0;
};

// Simultaneous Aberth-Ehrlich iteration; coefficients descending
// (a_n first). Initial guesses sit on a circle of radius 1 + max|a_i/a_n|
// with a fixed irrational rotation offset so symmetric configurations
// cannot stall. Jacobi-style sweeps, at most 200.
AberthResult aberth_roots(const std::vector<Complex>& coeffs_desc, double tol);

// At most 50 Newton steps from x0; stops when |dx| <= 1e-15 * max(1,|x|).
// Throws SolverError(input) on a flat derivative (|p'| < 1e-30) or
// non-convergence.
Complex newton_polish(const std::vector<Complex>& coeffs_desc, Complex x0);

struct RootMatch {
    std::vector<std::pair<int, int>> pairs;  // (estimate index, oracle index)
    std::vector<int> unmatched_oracle;       // oracle roots not reached
    double max_distance = 0.0;
};

// Greedy minimum-distance matching over the shorter list.
RootMatch match_roots(const std::vector<RootEstimate>& estimates,
                      const std::vector<RootEstimate>& oracle);

// Horner evaluation helpers shared with the series engine.
Complex eval_poly_desc(const std::vector<Complex>& coeffs_desc, Complex x);

}  // namespace resolvent
