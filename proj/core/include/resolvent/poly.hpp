#pragma once

#include <complex>
#include <string>
#include <vector>

#include "resolvent/rational.hpp"

namespace resolvent {

// Dense univariate polynomial over Rational, ascending degree order.
// The zero polynomial is the empty coefficient list; otherwise the
// highest stored coefficient is nonzero. Used for polynomials in s,
// in x, and in the recurrence index i alike.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(const Rational& c);
    explicit RatPoly(std::vector<Rational> ascending);

    static RatPoly variable();            // the monomial "t"
    static RatPoly monomial(int degree, const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of t^i; zero beyond the stored range.
    const Rational& coeff(int i) const;
    const Rational& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_term() const { return coeff(0); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& c) const;
    RatPoly operator/(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    RatPoly derivative() const;
    RatPoly shifted(int k) const;  // multiply by t^k

    Rational eval(const Rational& t) const;
    Complex eval(const Complex& t) const;

    // Quotient and remainder over the rational field; rhs must be nonzero.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    // Exact quotient; throws if the division leaves a remainder.
    RatPoly exact_div(const RatPoly& b) const;

    // gcd of all coefficients (gcd of numerators over lcm of denominators);
    // zero for the zero polynomial.
    Rational content() const;
    // Monic gcd over Q[t].
    static RatPoly gcd(const RatPoly& a, const RatPoly& b);

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline RatPoly operator*(const Rational& c, const RatPoly& p) { return p * c; }

}  // namespace resolvent
