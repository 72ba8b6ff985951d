#include "contdist/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "contdist/distributions.hpp"

#include <nlohmann/json.hpp>

namespace contdist {

std::vector<double> ConvergenceExperiment::default_grid(double lambda) {
  const double hi = lambda + 6.0 * std::sqrt(lambda) + 4.0;
  std::vector<double> g;
  for (int i = 0; i < 200; ++i) g.push_back(hi * i / 199.0);
  for (double x = 0.5; x < hi; x += 0.5) g.push_back(x);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

void ConvergenceExperiment::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::domain_error("ConvergenceExperiment: lambda must be > 0");
  if (n_schedule.empty())
    throw std::domain_error("ConvergenceExperiment: empty schedule");
  double n_min = n_schedule.front();
  for (size_t i = 0; i < n_schedule.size(); ++i) {
    if (!(n_schedule[i] > 0))
      throw std::domain_error("ConvergenceExperiment: N must be > 0");
    if (i > 0 && !(n_schedule[i] > n_schedule[i - 1]))
      throw std::domain_error("ConvergenceExperiment: schedule must increase");
    n_min = std::min(n_min, n_schedule[i]);
    const double p = p_rule ? p_rule(n_schedule[i]) : lambda / n_schedule[i];
    if (!(p > 0) || !(p < 1))
      throw std::domain_error(
          "ConvergenceExperiment: p rule must give p in (0, 1)");
  }
  for (double x : grid)
    if (!(x >= 0) || !(x <= n_min + 1.0))
      throw std::domain_error(
          "ConvergenceExperiment: grid points must lie in [0, min N + 1]");
}

ConvergenceReport run_convergence(const ConvergenceExperiment& exp_in) {
  ConvergenceExperiment exp = exp_in;
  if (exp.grid.empty()) exp.grid = ConvergenceExperiment::default_grid(exp.lambda);
  exp.validate();

  const ContPoissonParams pois{exp.lambda};
  ConvergenceReport report;
  for (double n : exp.n_schedule) {
    const double p = exp.p_rule ? exp.p_rule(n) : exp.lambda / n;
    const ContBinomialParams binom{n, p};
    const std::int64_t m = static_cast<std::int64_t>(exp.grid.size());
    double sup_cdf = 0.0, sup_mass = 0.0;
#pragma omp parallel for reduction(max : sup_cdf, sup_mass) schedule(dynamic, 8)
    for (std::int64_t i = 0; i < m; ++i) {
      const double x = exp.grid[i];
      const double dc = std::abs(cbinom_cdf(binom, x) - cpois_cdf(pois, x));
      sup_cdf = std::max(sup_cdf, dc);
      if (x <= n) {
        const double dm =
            std::abs(interval_mass(binom, x) - interval_mass(pois, x));
        sup_mass = std::max(sup_mass, dm);
      }
    }
    report.records.push_back({n, p, sup_cdf, sup_mass});
  }

  report.monotone_decreasing = true;
  for (size_t i = 1; i < report.records.size(); ++i)
    if (!(report.records[i].sup_cdf_distance <
          report.records[i - 1].sup_cdf_distance))
      report.monotone_decreasing = false;
  return report;
}

IntervalMassCheck interval_mass_limit_check(double lambda, double n,
                                            double x) {
  if (!(x >= 0) || !(x <= n))
    throw std::domain_error("interval_mass_limit_check: need 0 <= x <= n");
  if (!(lambda / n < 1.0))
    throw std::domain_error("interval_mass_limit_check: need lambda/n < 1");
  const double bm = interval_mass(ContBinomialParams{n, lambda / n}, x);
  const double pm = interval_mass(ContPoissonParams{lambda}, x);
  return {bm, pm, std::abs(bm - pm)};
}

void write_csv(const ConvergenceReport& report, std::ostream& os) {
  os << "N,p,sup_cdf_distance,sup_interval_distance\n";
  os.precision(17);
  for (const auto& r : report.records)
    os << r.n << ',' << r.p << ',' << r.sup_cdf_distance << ','
       << r.sup_interval_distance << '\n';
}

void write_json(const ConvergenceReport& report, std::ostream& os) {
  nlohmann::json j;
  j["monotone_decreasing"] = report.monotone_decreasing;
  j["records"] = nlohmann::json::array();
  for (const auto& r : report.records)
    j["records"].push_back({{"N", r.n},
                            {"p", r.p},
                            {"sup_cdf_distance", r.sup_cdf_distance},
                            {"sup_interval_distance", r.sup_interval_distance}});
  os << j.dump(2) << '\n';
}

}  // namespace contdist
