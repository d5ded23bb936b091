#include "resolvent/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kOracleMatchTol = 1e-6;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return 1;
        case ErrorKind::degenerate: return 2;
        case ErrorKind::internal: return 2;
    }
    return 2;
}

}  // namespace

std::vector<Rational> parse_polynomial(const std::string& text) {
    std::istringstream is(text);
    std::vector<Rational> out;
    std::string tok;
    int pos = 0;
    while (is >> tok) {
        ++pos;
        auto r = parse_rational(tok);
        if (!r)
            throw SolverError(ErrorKind::input,
                              "malformed token at position " + std::to_string(pos) + ": '" +
                                  tok + "'");
        out.push_back(*r);
    }
    if (out.size() < 3)
        throw SolverError(ErrorKind::input,
                          "need at least 3 coefficients (degree >= 2), got " +
                              std::to_string(out.size()));
    if (out.front() == 0)
        throw SolverError(ErrorKind::input, "leading coefficient zero");
    return out;
}

RunReport run_pipeline(const RunConfig& cfg) {
    auto t_start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.input_coeffs = cfg.coeffs_desc;

    try {
        const int n = cfg.degree();
        if (n < 2) throw SolverError(ErrorKind::input, "degree must be >= 2");
        if (cfg.coeffs_desc.front() == 0)
            throw SolverError(ErrorKind::input, "leading coefficient zero");
        if (cfg.terms < n)
            throw SolverError(ErrorKind::input, "terms K must be >= degree");

        std::vector<Rational> poly_desc(cfg.coeffs_desc.begin(), cfg.coeffs_desc.end() - 1);
        Rational a0 = cfg.a0();

        if (cfg.normalize) {
            rep.normalized = normalize_coefficients(poly_desc, a0);
            rep.normalization_applied = rep.normalized.factor != 1;
        } else {
            rep.normalized.coeffs_desc = poly_desc;
            rep.normalized.a0 = a0;
            rep.normalized.factor = Rational(1);
        }
        const auto& inst = rep.normalized;
        XSPoly p = XSPoly::instance(inst.coeffs_desc);

        auto seeds = branch_seeds(p);

        ResolventODE raw = solve_resolvent(p);
        ResolventODE ode = shift_homogenize(raw, p);
        rep.ode = ode;
        Recurrence rec = extract_recurrence(ode);

        Complex a0_val = to_complex(inst.a0);
        Complex shift_val = to_complex(ode.shift);

        bool any_diverged = false, any_singular = false;
        for (int k = 0; k < static_cast<int>(seeds.size()); ++k) {
            auto t_branch = std::chrono::steady_clock::now();
            BranchReport br;
            br.branch.id = k;
            br.branch.seed = seeds[k];
            br.branch.shift = ode.shift;
            try {
                auto bs = taylor_seeds(p, seeds[k]);
                std::vector<Complex> yseeds = bs;
                yseeds[0] += shift_val;

                auto runres = run_recurrence(rec, yseeds, cfg.terms);
                br.branch.coeffs = runres.coeffs;
                br.raw_coeffs = runres.coeffs;
                if (runres.singular_index) {
                    br.branch.status = BranchStatus::singular_index;
                    br.branch.singular_index = runres.singular_index;
                    any_singular = true;
                    br.elapsed_ms = ms_since(t_branch);
                    rep.branches.push_back(std::move(br));
                    continue;
                }

                br.branch.radius_estimate =
                    br.branch.coeffs.size() >= 16
                        ? estimate_radius(br.branch.coeffs)
                        : std::numeric_limits<double>::infinity();

                double e = cfg.scale.automatic
                               ? (std::isfinite(br.branch.radius_estimate) &&
                                          br.branch.radius_estimate > 0.0
                                      ? std::min(br.branch.radius_estimate, 1.0)
                                      : 1.0)
                               : cfg.scale.value;
                br.branch = rescale(br.branch, e);

                auto ev = evaluate_branch(br.branch, a0_val);
                if (ev.diverged) {
                    br.branch.status = BranchStatus::diverged;
                    any_diverged = true;
                } else {
                    br.root = ev.root;
                    br.tail_estimate = ev.tail_estimate;
                    br.residual = std::abs(p.eval(ev.root, a0_val));
                    if (br.residual <= kResidualTol) {
                        br.branch.status = BranchStatus::converged;
                    } else {
                        br.branch.status = BranchStatus::diverged;
                        any_diverged = true;
                    }
                }
            } catch (const SolverError& e) {
                br.branch.status = BranchStatus::seed_failed;
                any_singular = true;
                if (rep.diagnostic.empty()) rep.diagnostic = e.what();
            }
            br.elapsed_ms = ms_since(t_branch);
            rep.branches.push_back(std::move(br));
        }

        if (cfg.oracle_check) {
            std::vector<Complex> desc;
            for (const auto& c : inst.coeffs_desc) desc.push_back(to_complex(c));
            desc.push_back(to_complex(inst.a0));
            auto ares = aberth_roots(desc, 1e-12);

            std::vector<RootEstimate> series_roots;
            for (const auto& br : rep.branches) {
                if (br.branch.status != BranchStatus::converged || !br.root) continue;
                RootEstimate e;
                e.value = *br.root;
                e.residual = br.residual;
                e.branch_id = br.branch.id;
                series_roots.push_back(e);
            }
            auto match = match_roots(series_roots, ares.roots);
            OracleReport orep;
            orep.roots = ares.roots;
            orep.max_match_distance = match.max_distance;
            orep.unmatched = match.unmatched_oracle;
            rep.oracle = orep;
            if (!series_roots.empty() && match.max_distance > kOracleMatchTol)
                any_diverged = true;
        }

        if (any_singular) rep.exit_status = 2;
        else if (any_diverged) rep.exit_status = 3;
        else rep.exit_status = 0;
        if (rep.exit_status == 3 && rep.diagnostic.empty())
            rep.diagnostic = "one or more branches diverged or missed the oracle";
    } catch (const SolverError& e) {
        rep.exit_status = exit_code(e.kind());
        rep.diagnostic = e.what();
    }

    rep.elapsed_ms = ms_since(t_start);
    return rep;
}

}  // namespace resolvent
