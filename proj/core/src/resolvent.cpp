#include "resolvent/resolvent.hpp"

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

// x-derivative of p as an s-free polynomial in x. Valid because only the
// constant-in-x coefficient of p may carry s.
RatPoly x_derivative_flat(const XSPoly& p) {
    std::vector<Rational> v;
    for (int i = 1; i <= p.degree_x(); ++i) {
        const RatPoly& c = p.coeff(i);
        if (!c.is_constant())
            throw SolverError(ErrorKind::input,
                              "implicit derivatives require s only in the constant term");
        v.push_back(c.constant_term() * Rational(i));
    }
    return RatPoly(std::move(v));
}

}  // namespace

std::vector<ImplicitDerivative> implicit_derivatives(const XSPoly& p, int k_max) {
    int n = p.degree_x();
    if (n < 2)
        throw SolverError(ErrorKind::input, "implicit_derivatives: degree must be >= 2");
    if (k_max < 1)
        throw SolverError(ErrorKind::input, "implicit_derivatives: k_max must be >= 1");

    RatPoly pd = x_derivative_flat(p);
    RatPoly pdd = pd.derivative();

    std::vector<ImplicitDerivative> out;
    out.reserve(k_max);
    RatPoly N(Rational(-1));
    out.push_back({1, N, 1});
    for (int i = 1; i < k_max; ++i) {
        N = -(N.derivative() * pd - Rational(2 * i - 1) * N * pdd);
        out.push_back({i + 1, N, 2 * (i + 1) - 1});
    }
    return out;
}

PolyMatrix assemble_system(const XSPoly& p, const std::vector<ImplicitDerivative>& derivs) {
    int n = p.degree_x();
    if (static_cast<int>(derivs.size()) != n - 1)
        throw SolverError(ErrorKind::input, "assemble_system: need n-1 implicit derivatives");

    RatPoly pd = x_derivative_flat(p);
    // pd^0 .. pd^(2n-3)
    std::vector<RatPoly> pd_pow{RatPoly(Rational(1))};
    for (int k = 1; k <= 2 * n - 3; ++k) pd_pow.push_back(pd_pow.back() * pd);

    // Column j holds the reduced x-polynomial multiplying m_{j+1}.
    std::vector<XSPoly> columns;
    for (int k = 1; k <= n - 1; ++k) {
        int i = n - k;  // derivative order for unknown m_k
        const RatPoly& Ni = derivs[i - 1].numerator;
        columns.push_back(reduce_mod(
            XSPoly::from_x_poly(Ni * pd_pow[2 * (n - 1 - i)]), p));
    }
    columns.push_back(reduce_mod(
        XSPoly::from_x_poly(pd_pow[2 * n - 3].shifted(1)), p));  // m_n * x
    columns.push_back(reduce_mod(XSPoly::from_x_poly(pd_pow[2 * n - 3]), p));  // m_{n+1}

    PolyMatrix M(n, n + 1);
    for (int row = 0; row < n; ++row) {
        int xpow = n - 1 - row;
        for (int col = 0; col <= n; ++col) M.at(row, col) = columns[col].coeff(xpow);
    }
    return M;
}

ResolventODE solve_resolvent(const XSPoly& p) {
    int n = p.degree_x();
    if (n < 2)
        throw SolverError(ErrorKind::input, "resolvent requires degree >= 2");
    if (!p.leading().is_constant() || p.leading().constant_term() == 0)
        throw SolverError(ErrorKind::input, "leading coefficient must be a nonzero constant");

    // s = 0 must be an ordinary expansion point: p(x,0) squarefree.
    RatPoly p0 = p.eval_s(Rational(0));
    RatPoly g = RatPoly::gcd(p0, p0.derivative());
    if (g.degree() > 0)
        throw SolverError(ErrorKind::degenerate,
                          "p(x,0) has a multiple root (discriminant zero at s=0): " +
                              g.str("x"));

    auto derivs = implicit_derivatives(p, n - 1);
    PolyMatrix M = assemble_system(p, derivs);
    std::vector<RatPoly> m;
    try {
        m = nullspace_poly_matrix(M);
    } catch (const SolverError& e) {
        if (e.kind() == ErrorKind::degenerate)
            throw SolverError(ErrorKind::degenerate,
                              std::string("no resolvent of order n-1 found: ") + e.what());
        throw;
    }

    if (m[0].is_zero())
        throw SolverError(ErrorKind::degenerate,
                          "resolvent leading coefficient vanishes identically");

    ResolventODE ode;
    ode.order = n - 1;
    ode.coeffs.resize(n);
    for (int j = 0; j <= n - 1; ++j) ode.coeffs[j] = m[n - 1 - j];
    ode.inhomog = m[n];
    Rational an = p.leading().constant_term();
    Rational an1 = p.coeff(n - 1).is_constant() ? p.coeff(n - 1).constant_term() : Rational(0);
    ode.shift = an1 / (Rational(n) * an);
    return ode;
}

ResolventODE shift_homogenize(const ResolventODE& ode, const XSPoly& p) {
    int n = p.degree_x();
    Rational an = p.leading().constant_term();
    Rational an1 = p.coeff(n - 1).constant_term();
    Rational shift = an1 / (Rational(n) * an);

    RatPoly residual = ode.inhomog - ode.coeffs[0] * shift;
    if (!residual.is_zero())
        throw SolverError(ErrorKind::internal,
                          "homogenization failed: residual constant term " +
                              residual.str());

    ResolventODE out = ode;
    out.inhomog = RatPoly();
    out.shift = shift;
    return out;
}

}  // namespace resolvent
