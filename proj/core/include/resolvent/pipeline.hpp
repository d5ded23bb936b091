#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resolvent/series.hpp"

namespace resolvent {

struct ScaleMode {
    bool automatic = true;
    double value = 1.0;  // used when !automatic
};

struct RunConfig {
    std::vector<Rational> coeffs_desc;  // a_n .. a_1, a_0
    int terms = 64;                     // K
    ScaleMode scale;
    bool normalize = true;
    bool oracle_check = false;
    std::optional<std::string> json_path;
    std::optional<std::string> csv_path;
    bool emit_ode = false;

    int degree() const { return static_cast<int>(coeffs_desc.size()) - 1; }
    Rational a0() const { return coeffs_desc.back(); }
};

struct BranchReport {
    SeriesBranch branch;
    std::vector<Complex> raw_coeffs;  // y-series before rescaling
    std::optional<Complex> root;
    double residual = 0.0;
    double tail_estimate = 0.0;
    double elapsed_ms = 0.0;
};

struct OracleReport {
    std::vector<RootEstimate> roots;
    double max_match_distance = 0.0;
    std::vector<int> unmatched;
};

struct RunReport {
    std::vector<Rational> input_coeffs;  // as parsed, descending, incl a0
    NormalizedInstance normalized;
    bool normalization_applied = false;
    std::optional<ResolventODE> ode;  // homogeneous, post-shift
    std::vector<BranchReport> branches;
    std::optional<OracleReport> oracle;
    int exit_status = 0;
    std::string diagnostic;  // nonempty on failure
    double elapsed_ms = 0.0;
};

// Whitespace-separated exact rationals, descending degree, constant term
// last. Throws SolverError(input) with a position-bearing message.
std::vector<Rational> parse_polynomial(const std::string& text);

// normalize -> resolvent -> shift -> recurrence -> branches -> evaluate
// -> oracle check. Never throws for input/math failures: they land in the
// report as exit_status + diagnostic, with partial results kept.
RunReport run_pipeline(const RunConfig& cfg);

}  // namespace resolvent
