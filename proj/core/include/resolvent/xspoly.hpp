#pragma once

#include <vector>

#include "resolvent/poly.hpp"

namespace resolvent {

// Polynomial in x whose coefficients are polynomials in s (RatPoly).
// Ascending x-degree; the leading stored coefficient is nonzero.
class XSPoly {
public:
    XSPoly() = default;
    explicit XSPoly(std::vector<RatPoly> ascending_in_x);

    // Lift a polynomial in x with rational coefficients (s-free).
    static XSPoly from_x_poly(const RatPoly& px);

    // p(x, s) = a_n x^n + ... + a_1 x + s for descending (a_n ... a_1).
    static XSPoly instance(const std::vector<Rational>& descending_x_coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<RatPoly>& coeffs() const { return coeffs_; }
    const RatPoly& coeff(int i) const;
    const RatPoly& leading() const;

    XSPoly operator+(const XSPoly& o) const;
    XSPoly operator-(const XSPoly& o) const;
    XSPoly operator-() const;
    XSPoly operator*(const XSPoly& o) const;
    XSPoly operator*(const RatPoly& c) const;   // multiply by an s-polynomial
    bool operator==(const XSPoly& o) const { return coeffs_ == o.coeffs_; }

    XSPoly derivative_x() const;
    XSPoly derivative_s() const;

    // Substitute a rational value for s, leaving a polynomial in x.
    RatPoly eval_s(const Rational& s) const;

    // p(x_val, s_val) in complex arithmetic.
    Complex eval(const Complex& x_val, const Complex& s_val) const;

private:
    void trim();
    std::vector<RatPoly> coeffs_;
};

// Remainder of q modulo p in x, by the rewrite x^n -> -(lower terms)/a_n.
// p must have x-degree n >= 1 with an s-free leading coefficient. The
// result has x-degree <= n-1 and q - result is exactly divisible by p.
XSPoly reduce_mod(const XSPoly& q, const XSPoly& p);

}  // namespace resolvent
