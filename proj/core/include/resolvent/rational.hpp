#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace resolvent {

// Exact arbitrary-precision rational, always stored reduced with a
// positive denominator (mpq_class canonicalizes on construction).
using Rational = mpq_class;

using Complex = std::complex<double>;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }

// "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q"; returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

Rational rat_abs(const Rational& r);

// Smallest 2^k (integer k >= 0) strictly greater than r. Used by
// coefficient normalization.
Rational pow2_above(const Rational& r);

}  // namespace resolvent
