#include "resolvent/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resolvent/errors.hpp"

namespace resolvent {

std::string to_string(BranchStatus s) {
    switch (s) {
        case BranchStatus::converged: return "converged";
        case BranchStatus::diverged: return "diverged";
        case BranchStatus::singular_index: return "singular_index";
        case BranchStatus::seed_failed: return "seed_failed";
    }
    return "unknown";
}

NormalizedInstance normalize_coefficients(const std::vector<Rational>& coeffs_desc,
                                          const Rational& a0) {
    Rational m = rat_abs(a0);
    for (const auto& c : coeffs_desc) m = std::max(m, rat_abs(c));
    Rational M = pow2_above(m);

    NormalizedInstance out;
    out.factor = M;
    out.a0 = a0 / M;
    out.coeffs_desc.reserve(coeffs_desc.size());
    for (const auto& c : coeffs_desc) out.coeffs_desc.push_back(c / M);
    return out;
}

std::vector<Complex> branch_seeds(const XSPoly& p) {
    const int n = p.degree_x();
    RatPoly p0 = p.eval_s(Rational(0));
    RatPoly g = RatPoly::gcd(p0, p0.derivative());
    if (g.degree() > 0) {
        // Name a repeated root in the diagnostic.
        std::string where = g.str("x");
        if (g.coeff(0) == 0) where = "x = 0 (a_1 = 0)";
        throw SolverError(ErrorKind::degenerate,
                          "multiple root of p(x,0); repeated factor: " + where);
    }

    std::vector<Complex> seeds;
    RatPoly cofactor = p0;
    if (p0.coeff(0) == 0) {
        seeds.emplace_back(0.0, 0.0);  // exact seed at the origin
        std::vector<Rational> shifted(p0.coeffs().begin() + 1, p0.coeffs().end());
        cofactor = RatPoly(std::move(shifted));
    }
    if (cofactor.degree() >= 1) {
        std::vector<Complex> desc;
        for (int i = cofactor.degree(); i >= 0; --i)
            desc.push_back(to_complex(cofactor.coeff(i)));
        auto res = aberth_roots(desc, 1e-13);
        for (auto& r : res.roots) {
            Complex z = r.value;
            try {
                z = newton_polish(desc, z);
            } catch (const SolverError&) {
                // keep the Aberth value; residual is checked below
            }
            seeds.push_back(z);
        }
    }
    if (static_cast<int>(seeds.size()) != n)
        throw SolverError(ErrorKind::internal, "branch_seeds: seed count mismatch");
    return seeds;
}

std::vector<Complex> taylor_seeds(const XSPoly& p, const Complex& b0) {
    const int n = p.degree_x();
    std::vector<Complex> out{b0};
    if (n == 2) return out;

    auto derivs = implicit_derivatives(p, n - 2);
    RatPoly p0 = p.eval_s(Rational(0));
    Complex pd = p0.derivative().eval(b0);
    if (std::abs(pd) < 1e-14)
        throw SolverError(ErrorKind::degenerate, "taylor_seeds: p'(b0) = 0, seed failed");

    double factorial = 1.0;
    for (int k = 1; k <= n - 2; ++k) {
        factorial *= k;
        Complex num = derivs[k - 1].numerator.eval(b0);
        out.push_back(num / (factorial * std::pow(pd, 2 * k - 1)));
    }
    return out;
}

std::vector<Rational> taylor_seeds_exact(const XSPoly& p, const Rational& b0) {
    const int n = p.degree_x();
    std::vector<Rational> out{b0};
    if (n == 2) return out;

    auto derivs = implicit_derivatives(p, n - 2);
    RatPoly p0 = p.eval_s(Rational(0));
    Rational pd = p0.derivative().eval(b0);
    if (pd == 0)
        throw SolverError(ErrorKind::degenerate, "taylor_seeds: p'(b0) = 0, seed failed");

    Rational factorial(1);
    Rational pd_pow = pd;  // pd^(2k-1)
    for (int k = 1; k <= n - 2; ++k) {
        factorial *= k;
        if (k > 1) pd_pow *= pd * pd;
        out.push_back(derivs[k - 1].numerator.eval(b0) / (factorial * pd_pow));
    }
    return out;
}

double estimate_radius(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 16)
        throw SolverError(ErrorKind::input, "estimate_radius: need at least 16 coefficients");
    const int N = static_cast<int>(coeffs.size()) - 1;
    const int start = 2 * N / 3;
    auto nonzero = [&](int i) { return std::abs(coeffs[i]) > 1e-300; };

    std::vector<double> ratios;
    for (int i = start; i < N; ++i) {
        if (!nonzero(i)) continue;
        for (int gap = 1; i + gap <= N; ++gap) {
            if (!nonzero(i + gap)) continue;
            ratios.push_back(std::pow(std::abs(coeffs[i + gap]) / std::abs(coeffs[i]),
                                      1.0 / gap));
            break;
        }
    }
    if (ratios.empty()) return std::numeric_limits<double>::infinity();
    std::sort(ratios.begin(), ratios.end());
    double median = ratios[ratios.size() / 2];
    if (!std::isfinite(median)) return 0.0;
    if (median <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / median;
}

SeriesBranch rescale(const SeriesBranch& branch, double e) {
    if (!(e > 0.0))
        throw SolverError(ErrorKind::input, "rescale: scale must be positive");
    SeriesBranch out = branch;
    double ratio = e / branch.scale;
    double pw = 1.0;
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] = branch.coeffs[i] * pw;
        pw *= ratio;
    }
    out.scale = e;
    return out;
}

BranchEval evaluate_branch(const SeriesBranch& branch, const Complex& s_val) {
    BranchEval out;
    double rho = branch.radius_estimate > 0.0 && std::isfinite(branch.radius_estimate)
                     ? std::abs(s_val) / branch.radius_estimate
                     : 0.0;
    if (std::abs(s_val) > 0.0 && branch.radius_estimate == 0.0) rho = 1.0;
    if (rho >= 1.0) {
        out.diverged = true;
        return out;
    }
    Complex t = s_val / branch.scale;
    Complex acc(0.0, 0.0);
    for (auto it = branch.coeffs.rbegin(); it != branch.coeffs.rend(); ++it)
        acc = acc * t + *it;
    out.y = acc;
    out.root = acc - to_complex(branch.shift);
    if (!branch.coeffs.empty()) {
        double last = std::abs(branch.coeffs.back()) *
                      std::pow(std::abs(t), static_cast<double>(branch.coeffs.size() - 1));
        out.tail_estimate = rho < 1.0 ? last / (1.0 - rho) : last;
    }
    return out;
}

}  // namespace resolvent
