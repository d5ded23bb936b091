#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "resolvent/errors.hpp"
#include "resolvent/pipeline.hpp"
#include "resolvent/report.hpp"

using namespace resolvent;

TEST_CASE("parse_polynomial") {
    auto c = parse_polynomial("1 0 1 1/10");
    REQUIRE(c.size() == 4);
    CHECK(c[0] == rat(1));
    CHECK(c[2] == rat(1));
    CHECK(c[3] == rat(1, 10));

    CHECK_THROWS_WITH_AS(parse_polynomial("0 1 1"), doctest::Contains("leading"),
                         SolverError);
    CHECK_THROWS_WITH_AS(parse_polynomial("1 x 1"), doctest::Contains("position 2"),
                         SolverError);
    CHECK_THROWS_AS(parse_polynomial("1 1"), SolverError);  // degree < 2

    // round trip through the serialized form
    for (const auto& r : c) CHECK(*parse_rational(to_string(r)) == r);
}

TEST_CASE("pipeline solves the depressed cubic end to end") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
    cfg.oracle_check = true;
    auto rep = run_pipeline(cfg);
    CHECK(rep.exit_status == 0);
    REQUIRE(rep.branches.size() == 3);
    REQUIRE(rep.oracle);
    CHECK(rep.oracle->max_match_distance <= 1e-6);

    bool found_real = false;
    for (const auto& br : rep.branches) {
        CHECK(br.branch.status == BranchStatus::converged);
        CHECK(br.residual <= 1e-8);
        if (std::abs(br.branch.seed) < 1e-12) {
            REQUIRE(br.root);
            CHECK(br.root->real() == doctest::Approx(-0.09902885).epsilon(1e-6));
            found_real = true;
        }
    }
    CHECK(found_real);
}

TEST_CASE("a0 = 0 returns the seeds with no series work") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 1 0");
    auto rep = run_pipeline(cfg);
    CHECK(rep.exit_status == 0);
    REQUIRE(rep.branches.size() == 2);
    for (const auto& br : rep.branches) {
        REQUIRE(br.root);
        CHECK(std::abs(*br.root - br.branch.seed) < 1e-12);
    }
}

TEST_CASE("degenerate instance exits 2 with a named diagnostic") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 1 0 1/10");  // x^3 + x^2 + s
    auto rep = run_pipeline(cfg);
    CHECK(rep.exit_status == 2);
    CHECK(rep.diagnostic.find("multiple root") != std::string::npos);
    CHECK(rep.branches.empty());
}

TEST_CASE("evaluation outside the radius reports divergence, exit 3") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 1 1/2");  // x^2 + x + s at s = 0.5
    auto rep = run_pipeline(cfg);
    CHECK(rep.exit_status == 3);
    bool any_diverged = false;
    for (const auto& br : rep.branches)
        if (br.branch.status == BranchStatus::diverged) any_diverged = true;
    CHECK(any_diverged);
    // a diverged branch never reports a root value
    for (const auto& br : rep.branches)
        if (br.branch.status == BranchStatus::diverged) CHECK(!br.root);
}

TEST_CASE("input errors exit 1") {
    RunConfig cfg;
    cfg.coeffs_desc = {rat(1), rat(1), rat(0)};
    cfg.terms = 1;  // K < n
    auto rep = run_pipeline(cfg);
    CHECK(rep.exit_status == 1);
    CHECK(!rep.diagnostic.empty());
}

TEST_CASE("JSON output is deterministic and carries the golden resolvent") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
    cfg.normalize = false;
    cfg.oracle_check = true;
    auto rep1 = run_pipeline(cfg);
    auto rep2 = run_pipeline(cfg);
    std::string j1 = report_to_json(rep1), j2 = report_to_json(rep2);
    CHECK(j1 == j2);
    // resolvent block for x^3 + x + s, order y'', y', y, ascending s inside
    CHECK(j1.find("\"coefficients_s\":[[4,0,27],[0,27],[-3]]") != std::string::npos);
    CHECK(j1.find("\"exit_status\":0") != std::string::npos);
    CHECK(j1.find("\"oracle\":{") != std::string::npos);
}

TEST_CASE("ODE JSON document") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
    cfg.normalize = false;
    auto rep = run_pipeline(cfg);
    REQUIRE(rep.ode);
    CHECK(ode_to_json(*rep.ode) ==
          "{\"order\":2,\"shift\":0,\"coefficients\":[[4,0,27],[0,27],[-3]]}");
}

TEST_CASE("CSV dump of raw coefficients") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
    cfg.normalize = false;
    auto rep = run_pipeline(cfg);
    std::string csv = coeffs_to_csv(rep);
    CHECK(csv.rfind("branch_id,i,re,im\n", 0) == 0);
    // branch 0 (seed 0) has b_3 = 1 for the depressed cubic
    CHECK(csv.find("0,3,1.0,0.0\n") != std::string::npos);
}

TEST_CASE("failed run still emits schema-complete JSON") {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 1 0 1/10");
    auto rep = run_pipeline(cfg);
    std::string j = report_to_json(rep);
    for (const char* key :
         {"\"input\"", "\"normalization\"", "\"resolvent\"", "\"branches\"", "\"oracle\"",
          "\"exit_status\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("\"exit_status\":2") != std::string::npos);
}
