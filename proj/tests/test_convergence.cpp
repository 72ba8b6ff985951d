#include <cmath>
#include <sstream>

#include <doctest.h>

#include "contdist/convergence.hpp"
#include "contdist/special.hpp"

using namespace contdist;

TEST_CASE("default run: distances decrease along the schedule") {
  ConvergenceExperiment exp;
  exp.lambda = 2.0;
  exp.n_schedule = {16, 64, 256, 1024};
  const auto report = run_convergence(exp);
  REQUIRE(report.records.size() == 4);
  CHECK(report.monotone_decreasing);
  for (size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    CHECK(r.sup_cdf_distance >= 0.0);
    CHECK(r.sup_cdf_distance <= 1.0);
    CHECK(r.sup_interval_distance >= 0.0);
    CHECK(r.sup_interval_distance <= 1.0);
    if (i > 0) {
      CHECK(r.sup_cdf_distance < report.records[i - 1].sup_cdf_distance);
      CHECK(r.sup_interval_distance <
            report.records[i - 1].sup_interval_distance);
    }
  }
  // Baseline frozen from an independent high-precision run.
  CHECK(std::abs(report.records[0].sup_cdf_distance - 0.021273751306786) <=
        1e-9);
  CHECK(std::abs(report.records[3].sup_cdf_distance - 0.00031658738150832) <=
        1e-9);
}

TEST_CASE("interval mass limit check") {
  // x = 0: binomial mass is (1 - lambda/n)^n against e^{-lambda}.
  const auto c = interval_mass_limit_check(1.0, 100.0, 0.0);
  CHECK(c.binomial_mass == doctest::Approx(std::pow(0.99, 100)).epsilon(1e-12));
  CHECK(c.poisson_mass == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(c.abs_diff == doctest::Approx(std::abs(c.binomial_mass - c.poisson_mass)));

  // Gap shrinks monotonically in n for fixed x.
  double prev = 1.0;
  for (double n : {1e2, 1e3, 1e4}) {
    const double d = interval_mass_limit_check(1.0, n, 1.5).abs_diff;
    CHECK(d < prev);
    prev = d;
  }

  // Classical elementary limit at N = 1024, lambda = 2:
  // |(1 - 2/1024)^1024 - e^{-2}| ~ e^{-2} lambda^2 / (2 N).
  const auto big = interval_mass_limit_check(2.0, 1024.0, 0.0);
  const double predicted = std::exp(-2.0) * 4.0 / (2.0 * 1024.0);
  CHECK(std::abs(big.abs_diff - predicted) <= 0.05 * predicted);

  CHECK_THROWS_AS(interval_mass_limit_check(1.0, 10.0, 11.0),
                  std::domain_error);
  CHECK_THROWS_AS(interval_mass_limit_check(10.0, 5.0, 1.0),
                  std::domain_error);
}

TEST_CASE("Stirling-consistency factor") {
  // Gamma(n+1) / (Gamma(n-x+1) n^x) -> 1 as n -> inf with x fixed.
  const double n = 1e4, x = 2.5;
  const double factor = std::exp(log_gamma(n + 1.0) - log_gamma(n - x + 1.0) -
                                 x * std::log(n));
  CHECK(std::abs(factor - 1.0) <= 1e-3);
}

TEST_CASE("perturbed p rule still converges") {
  ConvergenceExperiment exp;
  exp.lambda = 2.0;
  exp.n_schedule = {16, 64, 256, 1024};
  exp.p_rule = [](double n) { return 2.0 / n + 1.0 / (n * n); };
  const auto report = run_convergence(exp);
  CHECK(report.records.back().sup_cdf_distance <
        report.records.front().sup_cdf_distance);
  CHECK(report.records.back().sup_cdf_distance < 0.001);
}

TEST_CASE("validation") {
  ConvergenceExperiment exp;
  exp.lambda = 10.0;
  exp.n_schedule = {5.0};  // p = 2 is invalid
  CHECK_THROWS_AS(run_convergence(exp), std::domain_error);

  exp = {};
  exp.n_schedule = {64, 16};  // not increasing
  CHECK_THROWS_AS(run_convergence(exp), std::domain_error);

  exp = {};
  exp.n_schedule.clear();
  CHECK_THROWS_AS(run_convergence(exp), std::domain_error);

  exp = {};
  exp.n_schedule = {16};
  exp.grid = {30.0};  // beyond min N + 1
  CHECK_THROWS_AS(run_convergence(exp), std::domain_error);
}

TEST_CASE("single-element schedule") {
  ConvergenceExperiment exp;
  exp.lambda = 1.0;
  exp.n_schedule = {32};
  const auto report = run_convergence(exp);
  CHECK(report.records.size() == 1);
}

TEST_CASE("report serialization") {
  ConvergenceExperiment exp;
  exp.lambda = 1.0;
  exp.n_schedule = {16, 64};
  const auto report = run_convergence(exp);

  std::ostringstream csv;
  write_csv(report, csv);
  CHECK(csv.str().rfind("N,p,sup_cdf_distance,sup_interval_distance\n", 0) ==
        0);
  int lines = 0;
  for (char c : csv.str())
    if (c == '\n') ++lines;
  CHECK(lines == 3);

  std::ostringstream json;
  write_json(report, json);
  CHECK(json.str().find("\"sup_cdf_distance\"") != std::string::npos);
}
