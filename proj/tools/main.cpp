#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "resolvent/errors.hpp"
#include "resolvent/pipeline.hpp"
#include "resolvent/report.hpp"

using namespace resolvent;

namespace {

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open for writing: " << path << "\n";
        return 1;
    }
    out << content;
    if (!out) {
        std::cerr << "write failed: " << path << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial roots via the differential resolvent of the root function"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve one polynomial instance");
    std::string coeffs_text;
    int terms = 64;
    std::string scale = "auto";
    bool no_normalize = false;
    bool oracle_check = false;
    std::string json_path, csv_path;
    bool emit_ode = false;

    solve->add_option("--coeffs", coeffs_text,
                      "descending coefficients a_n .. a_1 a_0, exact rationals")
        ->required();
    solve->add_option("--terms", terms, "series truncation length K (default 64)");
    solve->add_option("--scale", scale, "series scale: 'auto' or a positive number");
    solve->add_flag("--no-normalize", no_normalize, "skip coefficient normalization");
    solve->add_flag("--oracle-check", oracle_check,
                    "verify every root against the Aberth iteration oracle");
    solve->add_option("--json", json_path, "write the JSON report to this path");
    solve->add_flag("--emit-ode", emit_ode, "print the resolvent ODE as JSON");
    solve->add_option("--emit-coeffs", csv_path, "write series coefficients as CSV");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        cfg.coeffs_desc = parse_polynomial(coeffs_text);
    } catch (const SolverError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    cfg.terms = terms;
    cfg.normalize = !no_normalize;
    cfg.oracle_check = oracle_check;
    if (scale == "auto") {
        cfg.scale.automatic = true;
    } else {
        try {
            cfg.scale.value = std::stod(scale);
        } catch (...) {
            std::cerr << "input error: --scale expects 'auto' or a number\n";
            return 1;
        }
        if (!(cfg.scale.value > 0.0)) {
            std::cerr << "input error: --scale must be positive\n";
            return 1;
        }
        cfg.scale.automatic = false;
    }

    RunReport rep = run_pipeline(cfg);

    std::cout << report_to_text(rep);
    if (emit_ode && rep.ode) std::cout << ode_to_json(*rep.ode) << "\n";
    if (!json_path.empty())
        if (write_file(json_path, report_to_json(rep) + "\n")) return 1;
    if (!csv_path.empty())
        if (write_file(csv_path, coeffs_to_csv(rep))) return 1;
    return rep.exit_status;
}
