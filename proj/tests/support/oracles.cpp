#include "oracles.hpp"

#include <stdexcept>

namespace resolvent::testing {

std::vector<Rational> branch_series_by_matching(const XSPoly& p, const Rational& b0, int K) {
    const int n = p.degree_x();
    RatPoly p0 = p.eval_s(Rational(0));
    Rational pivot = p0.derivative().eval(b0);
    if (pivot == 0) throw std::invalid_argument("branch_series_by_matching: p'(b0) = 0");

    if (!(p.coeff(0) == RatPoly::variable()))
        throw std::invalid_argument("instance form required");

    // X holds the truncated series sum c_k s^k as a RatPoly in s.
    RatPoly X(b0);
    std::vector<Rational> c{b0};
    for (int k = 1; k <= K; ++k) {
        // E(s) = p(X(s), s); once c_0 .. c_{k-1} are fixed, the s^k
        // coefficient of E is linear in c_k with slope p'(b0).
        RatPoly E = RatPoly::variable();
        RatPoly Xp(Rational(1));
        for (int i = 1; i <= n; ++i) {
            Xp = Xp * X;
            E = E + Xp * p.coeff(i).constant_term();
        }
        Rational ck = -E.coeff(k) / pivot;
        c.push_back(ck);
        X = X + RatPoly::monomial(k, ck);
    }
    return c;
}

bool divides_exactly(const XSPoly& p, const XSPoly& q) {
    const int n = p.degree_x();
    if (!p.leading().is_constant()) throw std::invalid_argument("s-free leading required");
    Rational an = p.leading().constant_term();

    std::vector<RatPoly> r = q.coeffs();
    for (int d = static_cast<int>(r.size()) - 1; d >= n; --d) {
        if (r[d].is_zero()) continue;
        RatPoly f = r[d] / an;
        for (int j = 0; j <= n; ++j) r[d - n + j] = r[d - n + j] - f * p.coeff(j);
    }
    for (int d = 0; d < n && d < static_cast<int>(r.size()); ++d)
        if (!r[d].is_zero()) return false;
    return true;
}

Rational InstanceGen::random_rational() {
    std::uniform_int_distribution<int> den_d(1, 6);
    int den = den_d(rng);
    std::uniform_int_distribution<int> num_d(-den, den);
    Rational r(num_d(rng), den);
    r.canonicalize();
    return r;
}

std::vector<Rational> InstanceGen::random_instance(int deg_min, int deg_max) {
    std::uniform_int_distribution<int> deg_d(deg_min, deg_max);
    for (;;) {
        int n = deg_d(rng);
        std::vector<Rational> desc(n);
        for (auto& c : desc) c = random_rational();
        if (desc.front() == 0 || desc.back() == 0) continue;  // a_n, a_1 nonzero

        // p(x,0) = x * (a_n x^{n-1} + ... + a_1): squarefree iff the
        // cofactor is squarefree and does not vanish at 0 (a_1 != 0 holds).
        std::vector<Rational> asc(desc.rbegin(), desc.rend());
        RatPoly cof{std::vector<Rational>(asc)};
        RatPoly g = RatPoly::gcd(cof, cof.derivative());
        if (g.degree() > 0) continue;
        return desc;
    }
}

std::vector<Rational> catalan_numbers(int count) {
    std::vector<Rational> c{Rational(1)};
    for (int m = 0; m + 1 < count; ++m)
        c.push_back(c.back() * rat(2 * (2 * m + 1), m + 2));
    return c;
}

}  // namespace resolvent::testing
