// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "resolvent/errors.hpp"
#include "resolvent/pipeline.hpp"
#include "resolvent/recurrence.hpp"

using namespace resolvent;
using resolvent::testing::InstanceGen;
using resolvent::testing::catalan_numbers;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    std::printf("%s %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

RatPoly P(std::vector<long> asc) {
    std::vector<Rational> v;
    for (long c : asc) v.emplace_back(c);
    return RatPoly(std::move(v));
}

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared random instance set for criteria 4-6.
std::vector<std::vector<Rational>> random_set() {
    static std::vector<std::vector<Rational>> set;
    if (set.empty()) {
        InstanceGen gen(2024);
        for (int i = 0; i < 50; ++i) set.push_back(gen.random_instance(2, 6));
    }
    return set;
}

}  // namespace

int main() {
    criterion("1 quadratic golden resolvent", [] {
        auto t0 = std::chrono::steady_clock::now();
        XSPoly p = XSPoly::instance({rat(1), rat(1)});
        auto ode = solve_resolvent(p);
        bool ok = ode.coeffs[1] == P({1, -4}) && ode.coeffs[0] == P({2}) &&
                  ode.inhomog == P({1});
        auto h = shift_homogenize(ode, p);
        ok = ok && h.homogeneous() && h.coeffs[1] == P({1, -4}) && h.coeffs[0] == P({2}) &&
             h.shift == rat(1, 2);
        return ok && seconds(t0) < 1.0;
    });

    criterion("2 cubic golden resolvent and recurrence", [] {
        auto t0 = std::chrono::steady_clock::now();
        XSPoly p = XSPoly::instance({rat(1), rat(0), rat(1)});
        auto h = shift_homogenize(solve_resolvent(p), p);
        bool ok = h.coeffs[2] == P({4, 0, 27}) && h.coeffs[1] == P({0, 27}) &&
                  h.coeffs[0] == P({-3});
        auto rec = extract_recurrence(h);
        ok = ok && rec.max_offset == 2 && rec.bands.at(2) == P({8, 12, 4}) &&
             rec.bands.at(0) == P({-3, 0, 27}) && rec.bands.count(1) == 0;
        return ok && seconds(t0) < 1.0;
    });

    criterion("3 Catalan coefficients of the quadratic branch", [] {
        XSPoly p = XSPoly::instance({rat(1), rat(1)});
        auto h = shift_homogenize(solve_resolvent(p), p);
        auto rec = extract_recurrence(h);
        auto seeds = taylor_seeds_exact(p, Rational(0));
        seeds[0] += h.shift;
        auto run = run_recurrence_exact(rec, seeds, 12);
        if (run.singular_index) return false;
        auto cat = catalan_numbers(12);
        // x-coefficients: the shift only moves index 0
        for (int i = 1; i <= 12; ++i)
            if (run.coeffs[i] != -cat[i - 1]) return false;
        return run.coeffs[0] - h.shift == Rational(0);
    });

    criterion("4 exact oracle equivalence on 50 random instances", [] {
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& desc : random_set()) {
            XSPoly p = XSPoly::instance(desc);
            auto h = shift_homogenize(solve_resolvent(p), p);
            auto rec = extract_recurrence(h);
            auto seeds = taylor_seeds_exact(p, Rational(0));
            seeds[0] += h.shift;
            auto run = run_recurrence_exact(rec, seeds, 20);
            if (run.singular_index) return false;
            // independent Taylor route: implicit derivatives at b0 = 0
            auto derivs = implicit_derivatives(p, 20);
            Rational a1 = desc.back();
            Rational factorial(1), a1_pow(1);
            if (run.coeffs[0] - h.shift != Rational(0)) return false;
            for (int k = 1; k <= 20; ++k) {
                factorial *= k;
                a1_pow = k == 1 ? a1 : a1_pow * a1 * a1;
                Rational bk = derivs[k - 1].numerator.eval(Rational(0)) / (factorial * a1_pow);
                if (run.coeffs[k] != bk) return false;
            }
        }
        return seconds(t0) < 60.0;
    });

    criterion("5 trace identity on the same random set", [] {
        for (const auto& desc : random_set()) {
            XSPoly p = XSPoly::instance(desc);
            int n = p.degree_x();
            auto ode = solve_resolvent(p);
            RatPoly lhs = ode.inhomog * (Rational(n) * desc.front()) - ode.coeffs[0] * desc[1];
            if (!lhs.is_zero()) return false;
        }
        return true;
    });

    criterion("6 end-to-end root accuracy on 50 random instances", [] {
        for (const auto& desc : random_set()) {
            // Probe radii at a0 = 0, then place a0 well inside every branch.
            RunConfig probe;
            probe.coeffs_desc = desc;
            probe.coeffs_desc.push_back(rat(0));
            auto prep = run_pipeline(probe);
            if (prep.exit_status != 0) return false;
            double minrad = 1e9;
            for (const auto& br : prep.branches)
                if (std::isfinite(br.branch.radius_estimate))
                    minrad = std::min(minrad, br.branch.radius_estimate);
            double maxc = 0;
            for (const auto& c : desc) maxc = std::max(maxc, std::abs(to_double(c)));
            double target = std::min(0.4 * minrad * to_double(prep.normalized.factor),
                                     0.9 * maxc);
            long num = static_cast<long>(std::floor(target * 1024.0));
            if (num < 0) num = 0;

            RunConfig cfg;
            cfg.coeffs_desc = desc;
            cfg.coeffs_desc.push_back(rat(num, 1024));
            cfg.oracle_check = true;
            auto rep = run_pipeline(cfg);
            if (rep.exit_status != 0) return false;
            for (const auto& br : rep.branches) {
                if (br.branch.status != BranchStatus::converged) return false;
                if (br.residual > 1e-8) return false;
            }
            if (!rep.oracle || rep.oracle->max_match_distance > 1e-6) return false;
            if (!rep.oracle->unmatched.empty()) return false;

            // Vieta: seeds sum to -a_{n-1}/a_n
            Complex sum(0, 0);
            for (const auto& br : rep.branches) sum += br.branch.seed;
            double want = -to_double(rep.normalized.coeffs_desc[1] /
                                     rep.normalized.coeffs_desc[0]);
            if (std::abs(sum - Complex(want, 0)) > 1e-10) return false;
        }
        return true;
    });

    criterion("7 radius estimates within 5%", [] {
        auto branch_radius = [](std::vector<Rational> desc) {
            XSPoly p = XSPoly::instance(desc);
            auto h = shift_homogenize(solve_resolvent(p), p);
            auto rec = extract_recurrence(h);
            auto seeds = taylor_seeds(p, Complex(0, 0));
            std::vector<Complex> ys = seeds;
            ys[0] += to_complex(h.shift);
            auto run = run_recurrence(rec, ys, 64);
            return estimate_radius(run.coeffs);
        };
        double rq = branch_radius({rat(1), rat(1)});
        double rc = branch_radius({rat(1), rat(0), rat(1)});
        return std::abs(rq - 0.25) <= 0.05 * 0.25 &&
               std::abs(rc - std::sqrt(4.0 / 27.0)) <= 0.05 * std::sqrt(4.0 / 27.0);
    });

    criterion("8 evaluation golden for x^3 + x + 1/10", [] {
        RunConfig cfg;
        cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
        cfg.terms = 64;
        auto rep = run_pipeline(cfg);
        if (rep.exit_status != 0) return false;
        for (const auto& br : rep.branches) {
            if (std::abs(br.branch.seed) > 1e-12) continue;
            if (!br.root) return false;
            return std::abs(br.root->real() - (-0.09902885)) <= 1e-6 &&
                   std::abs(br.root->imag()) <= 1e-6 && br.residual <= 1e-8;
        }
        return false;
    });

    criterion("9 oracle standalone goldens", [] {
        auto near = [](const std::vector<RootEstimate>& roots, Complex want) {
            for (const auto& r : roots)
                if (std::abs(r.value - want) < 1e-10) return true;
            return false;
        };
        auto cubic = aberth_roots({{1, 0}, {-6, 0}, {11, 0}, {-6, 0}}, 1e-13);
        auto imag = aberth_roots({{1, 0}, {0, 0}, {1, 0}}, 1e-13);
        return near(cubic.roots, {1, 0}) && near(cubic.roots, {2, 0}) &&
               near(cubic.roots, {3, 0}) && near(imag.roots, {0, 1}) &&
               near(imag.roots, {0, -1});
    });

    criterion("10 honest failure: degenerate exit 2, out-of-radius exit 3", [] {
        RunConfig bad;
        bad.coeffs_desc = parse_polynomial("1 1 0 1/10");  // x^3 + x^2 + s
        auto brep = run_pipeline(bad);
        if (brep.exit_status != 2) return false;
        if (brep.diagnostic.find("multiple root") == std::string::npos) return false;

        RunConfig far;
        far.coeffs_desc = parse_polynomial("1 1 1/2");  // x^2 + x + s at 0.5 > 0.25
        auto frep = run_pipeline(far);
        if (frep.exit_status != 3) return false;
        bool any = false;
        for (const auto& br : frep.branches) {
            if (br.branch.status == BranchStatus::diverged) {
                any = true;
                if (br.root) return false;  // never a silent wrong root
            }
        }
        return any;
    });

    criterion("11 rescale invariance at s = 0.1", [] {
        XSPoly p = XSPoly::instance({rat(1), rat(0), rat(1)});
        auto h = shift_homogenize(solve_resolvent(p), p);
        auto rec = extract_recurrence(h);
        auto run = run_recurrence(rec, {Complex(0, 0), Complex(-1, 0)}, 64);
        SeriesBranch base;
        base.coeffs = run.coeffs;
        base.scale = 1.0;
        base.radius_estimate = estimate_radius(run.coeffs);

        double rad = base.radius_estimate;
        std::vector<double> scales{1.0, rad / 2.0, rad};
        std::vector<Complex> roots;
        for (double e : scales) {
            auto ev = evaluate_branch(rescale(base, e), Complex(0.1, 0));
            if (ev.diverged) return false;
            roots.push_back(ev.root);
        }
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) {
                double denom = std::max(std::abs(roots[i]), std::abs(roots[j]));
                if (std::abs(roots[i] - roots[j]) > 1e-12 * std::max(1.0, denom))
                    return false;
            }
        return true;
    });

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
