#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resolvent/oracle.hpp"
#include "resolvent/recurrence.hpp"
#include "resolvent/xspoly.hpp"

namespace resolvent {

enum class BranchStatus { converged, diverged, singular_index, seed_failed };

std::string to_string(BranchStatus s);

// One root branch of p(x,s) = 0 expanded around s = 0. Stored as the
// y-series of the shifted equation; the root is recovered as y - shift.
// `coeffs` are already rescaled: coeffs[i] = b_i * scale^i, so evaluation
// feeds the series s/scale.
struct SeriesBranch {
    int id = 0;
    Complex seed{0.0, 0.0};          // x-value at s = 0
    Rational shift = Rational(0);    // x = y - shift
    std::vector<Complex> coeffs;     // y-series, rescaled
    double scale = 1.0;
    double radius_estimate = 0.0;    // may be +infinity
    BranchStatus status = BranchStatus::converged;
    std::optional<int> singular_index;
};

struct NormalizedInstance {
    std::vector<Rational> coeffs_desc;  // a_n .. a_1
    Rational a0 = Rational(0);
    Rational factor = Rational(1);      // the divisor M
};

// Divide every coefficient and a0 by the smallest power of two strictly
// above their maximum absolute value; the root set is unchanged.
NormalizedInstance normalize_coefficients(const std::vector<Rational>& coeffs_desc,
                                          const Rational& a0);

// The n roots of p(x,0). The exact root 0 (present whenever the constant
// term of p(x,0) vanishes) comes first; the rest are Aberth roots of the
// cofactor, Newton-polished. Requires p(x,0) squarefree.
std::vector<Complex> branch_seeds(const XSPoly& p);

// Taylor coefficients b_0 .. b_{n-2} of the branch through b0, via
// b_k = N_k(b0) / (k! p'(b0)^(2k-1)). Requires p'(b0) != 0.
std::vector<Complex> taylor_seeds(const XSPoly& p, const Complex& b0);
std::vector<Rational> taylor_seeds_exact(const XSPoly& p, const Rational& b0);

// Reciprocal of the median growth ratio |b_{i+gap}/b_i|^(1/gap) over the
// last third of the coefficients; infinity for an identically-zero tail,
// 0 when the ratios blow up without trend. Needs >= 16 coefficients.
double estimate_radius(const std::vector<Complex>& coeffs);

// Store scale e and transform coefficients so evaluation at s uses s/e;
// mathematically the identity.
SeriesBranch rescale(const SeriesBranch& branch, double e);

struct BranchEval {
    Complex y{0.0, 0.0};
    Complex root{0.0, 0.0};  // y - shift
    double tail_estimate = 0.0;
    bool diverged = false;
};

// Horner evaluation of the rescaled series; diverged when
// |s_val| >= radius_estimate.
BranchEval evaluate_branch(const SeriesBranch& branch, const Complex& s_val);

}  // namespace resolvent
