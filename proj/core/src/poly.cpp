#include "resolvent/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace resolvent {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow2_above(const Rational& r) {
    Rational m = rat_abs(r);
    Rational p(1);
    while (p <= m) p *= 2;
    return p;
}

RatPoly::RatPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

RatPoly RatPoly::variable() { return monomial(1, Rational(1)); }

RatPoly RatPoly::monomial(int degree, const Rational& c) {
    if (c == 0) return RatPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& c) const {
    if (c == 0) return RatPoly();
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero rational");
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x /= c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

RatPoly RatPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(coeffs_.size() + k, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Complex RatPoly::eval(const Complex& t) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + Complex(it->get_d(), 0.0);
    return acc;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    int db = b.degree();
    if (a.degree() < db) {
        q = RatPoly();
        r = a;
        return;
    }
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[k + db] / b.leading();
        quo[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeff(j);
    }
    q = RatPoly(std::move(quo));
    r = RatPoly(std::move(rem));
}

RatPoly RatPoly::exact_div(const RatPoly& b) const {
    RatPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

Rational RatPoly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class g(0), l(1);
    for (const auto& c : coeffs_) {
        mpz_class num = abs(c.get_num());
        mpz_class den = c.get_den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x / x.leading();  // monic
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = rat_abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace resolvent
