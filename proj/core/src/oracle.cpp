#include "resolvent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resolvent/errors.hpp"

namespace resolvent {

Complex eval_poly_desc(const std::vector<Complex>& coeffs_desc, Complex x) {
    Complex acc(0.0, 0.0);
    for (const auto& c : coeffs_desc) acc = acc * x + c;
    return acc;
}

namespace {

std::vector<Complex> derivative_desc(const std::vector<Complex>& coeffs_desc) {
    int n = static_cast<int>(coeffs_desc.size()) - 1;
    std::vector<Complex> d;
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(coeffs_desc[i] * static_cast<double>(n - i));
    return d;
}

}  // namespace

AberthResult aberth_roots(const std::vector<Complex>& coeffs_desc, double tol) {
    if (coeffs_desc.size() < 2 || std::abs(coeffs_desc.front()) == 0.0)
        throw SolverError(ErrorKind::input,
                          "aberth_roots: degree >= 1 with nonzero leading coefficient required");
    const int n = static_cast<int>(coeffs_desc.size()) - 1;
    const auto deriv = derivative_desc(coeffs_desc);

    double max_ratio = 0.0, max_coeff = 0.0;
    for (const auto& c : coeffs_desc) max_coeff = std::max(max_coeff, std::abs(c));
    for (int i = 1; i <= n; ++i)
        max_ratio = std::max(max_ratio, std::abs(coeffs_desc[i] / coeffs_desc[0]));
    const double radius = 1.0 + max_ratio;

    // Fixed rotation by the golden-ratio angle breaks root symmetries.
    const double offset = 2.0 * M_PI * 0.6180339887498949;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * M_PI * k / n + offset;
        z[k] = radius * Complex(std::cos(theta), std::sin(theta));
    }

    AberthResult res;
    for (res.sweeps = 1; res.sweeps <= 200; ++res.sweeps) {
        std::vector<Complex> znew(n);
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex pv = eval_poly_desc(coeffs_desc, z[k]);
            Complex dv = eval_poly_desc(deriv, z[k]);
            if (std::abs(dv) == 0.0) {
                // Nudge off a critical point.
                znew[k] = z[k] + 1e-8 * radius;
                max_step = std::max(max_step, 1e-8 * radius);
                continue;
            }
            Complex w = pv / dv;
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            Complex corr = w / (1.0 - w * sum);
            znew[k] = z[k] - corr;
            max_step = std::max(max_step, std::abs(corr));
        }
        z = znew;
        if (max_step <= tol) {
            res.converged = true;
            break;
        }
    }

    for (int k = 0; k < n; ++k) {
        RootEstimate e;
        e.value = z[k];
        e.residual = std::abs(eval_poly_desc(coeffs_desc, z[k]));
        res.roots.push_back(e);
        res.worst_residual = std::max(res.worst_residual, e.residual);
    }
    std::sort(res.roots.begin(), res.roots.end(), [](const RootEstimate& a, const RootEstimate& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    if (!res.converged && res.worst_residual > tol * std::max(1.0, max_coeff))
        throw SolverError(ErrorKind::degenerate,
                          "aberth_roots: no convergence after 200 sweeps, worst residual " +
                              std::to_string(res.worst_residual));
    return res;
}

Complex newton_polish(const std::vector<Complex>& coeffs_desc, Complex x0) {
    const auto deriv = derivative_desc(coeffs_desc);
    Complex x = x0;
    for (int it = 0; it < 50; ++it) {
        Complex pv = eval_poly_desc(coeffs_desc, x);
        Complex dv = eval_poly_desc(deriv, x);
        if (std::abs(dv) < 1e-30)
            throw SolverError(ErrorKind::degenerate, "newton_polish: flat derivative");
        Complex dx = pv / dv;
        Complex xn = x - dx;
        // Never leave with a worse residual than the incoming point.
        if (std::abs(eval_poly_desc(coeffs_desc, xn)) > std::abs(pv)) return x;
        x = xn;
        if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) return x;
    }
    throw SolverError(ErrorKind::degenerate, "newton_polish: no convergence in 50 steps");
}

RootMatch match_roots(const std::vector<RootEstimate>& estimates,
                      const std::vector<RootEstimate>& oracle) {
    RootMatch m;
    struct Cand {
        double d;
        int i, j;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < static_cast<int>(estimates.size()); ++i)
        for (int j = 0; j < static_cast<int>(oracle.size()); ++j)
            cands.push_back({std::abs(estimates[i].value - oracle[j].value), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.d != b.d) return a.d < b.d;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    std::vector<bool> used_i(estimates.size(), false), used_j(oracle.size(), false);
    size_t want = std::min(estimates.size(), oracle.size());
    for (const auto& c : cands) {
        if (m.pairs.size() == want) break;
        if (used_i[c.i] || used_j[c.j]) continue;
        used_i[c.i] = used_j[c.j] = true;
        m.pairs.emplace_back(c.i, c.j);
        m.max_distance = std::max(m.max_distance, c.d);
    }
    for (int j = 0; j < static_cast<int>(oracle.size()); ++j)
        if (!used_j[j]) m.unmatched_oracle.push_back(j);
    return m;
}

}  // namespace resolvent
