#include "resolvent/xspoly.hpp"

#include "resolvent/errors.hpp"

namespace resolvent {

XSPoly::XSPoly(std::vector<RatPoly> ascending_in_x) : coeffs_(std::move(ascending_in_x)) {
    trim();
}

void XSPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XSPoly XSPoly::from_x_poly(const RatPoly& px) {
    std::vector<RatPoly> v;
    v.reserve(px.coeffs().size());
    for (const auto& c : px.coeffs()) v.emplace_back(c);
    return XSPoly(std::move(v));
}

XSPoly XSPoly::instance(const std::vector<Rational>& descending) {
    // descending = (a_n ... a_1); constant-in-x term is the symbol s itself
    std::vector<RatPoly> v;
    v.push_back(RatPoly::variable());
    for (auto it = descending.rbegin(); it != descending.rend(); ++it)
        v.emplace_back(*it);
    return XSPoly(std::move(v));
}

const RatPoly& XSPoly::coeff(int i) const {
    static const RatPoly zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const RatPoly& XSPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero XSPoly");
    return coeffs_.back();
}

XSPoly XSPoly::operator+(const XSPoly& o) const {
    std::vector<RatPoly> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return XSPoly(std::move(v));
}

XSPoly XSPoly::operator-(const XSPoly& o) const { return *this + (-o); }

XSPoly XSPoly::operator-() const {
    std::vector<RatPoly> v = coeffs_;
    for (auto& c : v) c = -c;
    return XSPoly(std::move(v));
}

XSPoly XSPoly::operator*(const XSPoly& o) const {
    if (is_zero() || o.is_zero()) return XSPoly();
    std::vector<RatPoly> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    return XSPoly(std::move(v));
}

XSPoly XSPoly::operator*(const RatPoly& c) const {
    std::vector<RatPoly> v = coeffs_;
    for (auto& x : v) x = x * c;
    return XSPoly(std::move(v));
}

XSPoly XSPoly::derivative_x() const {
    if (coeffs_.size() <= 1) return XSPoly();
    std::vector<RatPoly> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return XSPoly(std::move(v));
}

XSPoly XSPoly::derivative_s() const {
    std::vector<RatPoly> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.derivative());
    return XSPoly(std::move(v));
}

RatPoly XSPoly::eval_s(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.eval(s));
    return RatPoly(std::move(v));
}

Complex XSPoly::eval(const Complex& x_val, const Complex& s_val) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x_val + it->eval(s_val);
    return acc;
}

XSPoly reduce_mod(const XSPoly& q, const XSPoly& p) {
    int n = p.degree_x();
    if (n < 1)
        throw SolverError(ErrorKind::input, "reduce_mod: modulus is constant in x");
    if (!p.leading().is_constant())
        throw SolverError(ErrorKind::input,
                          "reduce_mod: modulus leading coefficient depends on s");
    Rational an = p.leading().constant_term();
    if (an == 0)
        throw SolverError(ErrorKind::input, "reduce_mod: modulus leading coefficient zero");

    std::vector<RatPoly> r = q.coeffs();
    for (int d = static_cast<int>(r.size()) - 1; d >= n; --d) {
        if (r[d].is_zero()) continue;
        RatPoly factor = r[d] / an;
        for (int j = 0; j < n; ++j)
            r[d - n + j] = r[d - n + j] - factor * p.coeff(j);
        r[d] = RatPoly();
    }
    r.resize(std::min<size_t>(r.size(), n));
    return XSPoly(std::move(r));
}

}  // namespace resolvent
