#pragma once

#include <vector>

#include "resolvent/polymatrix.hpp"
#include "resolvent/xspoly.hpp"

namespace resolvent {

// d^i x / ds^i = numerator(x) / p'(x)^(2i-1) along any root branch of
// p(x, s) = 0, where p' is the x-derivative.
struct ImplicitDerivative {
    int order = 0;
    RatPoly numerator;  // polynomial in x, s-free
    int denominator_exponent = 0;  // 2*order - 1
};

// Linear ODE in s satisfied by every (shifted) root branch:
//   sum_j coeffs[j] * y^(j) + inhomog = 0
// coeffs indexed by derivative order, coeffs[order] nonzero, coefficients
// content-normalized. `shift` is the substitution x = y - shift.
struct ResolventODE {
    int order = 0;
    std::vector<RatPoly> coeffs;  // size order+1, ascending derivative order
    RatPoly inhomog;              // zero after shift_homogenize
    Rational shift = Rational(0);

    bool homogeneous() const { return inhomog.is_zero(); }
};

// Numerators N_1 .. N_k_max of the implicit s-derivatives of x(s), via
// N_1 = -1, N_{i+1} = -(N_i' p' - (2i-1) N_i p''). Requires deg_x p >= 2
// and all x-coefficients except the constant term free of s.
std::vector<ImplicitDerivative> implicit_derivatives(const XSPoly& p, int k_max);

// n x (n+1) system whose nullspace vector is (m_1 ... m_{n+1}) of the
// order-(n-1) resolvent: substitute the implicit derivatives into
// m_1 x^(n-1) + ... + m_n x + m_{n+1}, clear p'^(2n-3), reduce mod p and
// collect x-powers. Row 0 holds the coefficient of x^(n-1).
PolyMatrix assemble_system(const XSPoly& p, const std::vector<ImplicitDerivative>& derivs);

// Full pipeline: implicit derivatives -> system -> nullspace. The returned
// ODE has order n-1 and annihilates every root branch of p.
ResolventODE solve_resolvent(const XSPoly& p);

// Apply x = y - a_{n-1}/(n a_n); the inhomogeneous term must cancel
// exactly, which is verified (SolverError(internal) otherwise).
ResolventODE shift_homogenize(const ResolventODE& ode, const XSPoly& p);

}  // namespace resolvent
