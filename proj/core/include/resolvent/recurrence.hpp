#pragma once

#include <map>
#include <optional>
#include <vector>

#include "resolvent/resolvent.hpp"

namespace resolvent {

// Banded linear recurrence sum_d bands[d](i) * b_{i+d} = 0 for all i >= 0
// (negative-index b are zero). Band polynomials are in the index i.
struct Recurrence {
    int order = 0;  // order of the source ODE
    std::map<int, RatPoly> bands;
    int max_offset = 0;

    const RatPoly& leading_band() const { return bands.at(max_offset); }
};

template <typename T>
struct RecurrenceRun {
    std::vector<T> coeffs;  // b_0 .. b_K on success; truncated on singularity
    std::optional<int> singular_index;  // i where the leading band vanished
};

// Match the coefficient of s^m after substituting y = sum b_i s^i into the
// homogeneous ODE. When the leading ODE coefficient is nonzero at s = 0
// the top band has offset = order; otherwise s = 0 is a singular point and
// the power-series ansatz fails (SolverError(degenerate)).
Recurrence extract_recurrence(const ResolventODE& ode);

// Seeds are b_0 .. b_{max_offset-1}; later coefficients follow by exact
// evaluation of the band polynomials at each integer index.
RecurrenceRun<Rational> run_recurrence_exact(const Recurrence& rec,
                                             const std::vector<Rational>& seeds, int K);
RecurrenceRun<Complex> run_recurrence(const Recurrence& rec,
                                      const std::vector<Complex>& seeds, int K);

}  // namespace resolvent
