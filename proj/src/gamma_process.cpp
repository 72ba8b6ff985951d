#include "contdist/gamma_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "contdist/errors.hpp"
#include "contdist/special.hpp"

namespace contdist {

void GammaProcessParams::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha))
    throw std::domain_error("GammaProcessParams: alpha must be > 0");
  if (!(beta > 0) || !std::isfinite(beta))
    throw std::domain_error("GammaProcessParams: beta must be > 0");
}

double transition_density(const GammaProcessParams& params, double t,
                          double x) {
  params.validate();
  if (!(t > 0) || !std::isfinite(t))
    throw std::domain_error("transition_density: t must be > 0");
  if (!(x >= 0) || !std::isfinite(x))
    throw std::domain_error("transition_density: x must be >= 0");
  const double at = params.alpha * t;
  if (x == 0) return at > 1 ? 0.0 : (at == 1 ? params.beta : HUGE_VAL);
  return std::exp(at * std::log(params.beta) - log_gamma(at) +
                  (at - 1.0) * std::log(x) - params.beta * x);
}

void HitTimeExperiment::validate() const {
  process.validate();
  if (!(level > 0) || !std::isfinite(level))
    throw std::domain_error("HitTimeExperiment: level must be > 0");
  if (!(dt > 0) || !std::isfinite(dt))
    throw std::domain_error("HitTimeExperiment: dt must be > 0");
  if (n_paths < 1)
    throw std::domain_error("HitTimeExperiment: n_paths must be >= 1");
}

double HitTimeExperiment::resolved_t_max() const {
  if (t_max > 0) return t_max;
  const ContPoissonParams law{process.beta * level};
  return cpois_quantile(law, 1.0 - 1e-6) / process.alpha + 10.0 * dt;
}

namespace {

HitTimeResult run_paths(const HitTimeExperiment& exp, bool parallel) {
  exp.validate();
  const double shape = exp.process.alpha * exp.dt;
  const double rate = exp.process.beta;
  const double horizon = exp.resolved_t_max();
  const std::int64_t max_steps =
      static_cast<std::int64_t>(std::ceil(horizon / exp.dt));
  const RandomStream root(exp.seed);

  std::vector<double> times(static_cast<size_t>(exp.n_paths));
  std::int64_t censored = 0;

#pragma omp parallel for reduction(+ : censored) schedule(static) if (parallel)
  for (std::int64_t i = 0; i < exp.n_paths; ++i) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(i));
    double sum = 0.0;
    std::int64_t k = 0;
    while (sum <= exp.level && k < max_steps) {
      sum += stream.next_gamma(shape, rate);
      ++k;
    }
    if (sum > exp.level) {
      times[static_cast<size_t>(i)] = exp.process.alpha * k * exp.dt;
    } else {
      times[static_cast<size_t>(i)] = -1.0;
      ++censored;
    }
  }

  if (censored > 0) {
    if (static_cast<double>(censored) / exp.n_paths > 1e-3)
      throw std::runtime_error(
          "simulate_hit_times: censored fraction exceeds 1e-3; "
          "experiment design error");
    times.erase(std::remove(times.begin(), times.end(), -1.0), times.end());
  }
  return {std::move(times), censored};
}

}  // namespace

HitTimeResult simulate_hit_times(const HitTimeExperiment& exp) {
  return run_paths(exp, true);
}

HitTimeResult simulate_hit_times_serial(const HitTimeExperiment& exp) {
  return run_paths(exp, false);
}

std::vector<HitTimeResult> simulate_hit_times_coarsened(
    const HitTimeExperiment& exp, const std::vector<int>& factors) {
  exp.validate();
  for (int m : factors)
    if (m < 1)
      throw std::domain_error("simulate_hit_times_coarsened: factor < 1");

  const double shape = exp.process.alpha * exp.dt;
  const double rate = exp.process.beta;
  const double horizon = exp.resolved_t_max();
  const std::int64_t max_steps =
      static_cast<std::int64_t>(std::ceil(horizon / exp.dt));
  const RandomStream root(exp.seed);
  const size_t nf = factors.size();

  std::vector<HitTimeResult> results(nf);
  for (auto& r : results)
    r.scaled_times.assign(static_cast<size_t>(exp.n_paths), -1.0);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < exp.n_paths; ++i) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(i));
    double sum = 0.0;
    std::int64_t k = 0;
    while (sum <= exp.level && k < max_steps) {
      sum += stream.next_gamma(shape, rate);
      ++k;
    }
    if (sum > exp.level) {
      // The path is nondecreasing, so on a grid coarsened by m the first
      // crossing lands on the smallest multiple of m at or above k.
      for (size_t j = 0; j < nf; ++j) {
        const std::int64_t m = factors[j];
        const std::int64_t kc = ((k + m - 1) / m) * m;
        results[j].scaled_times[static_cast<size_t>(i)] =
            exp.process.alpha * kc * exp.dt;
      }
    }
  }

  for (auto& r : results) {
    const auto censored_it =
        std::remove(r.scaled_times.begin(), r.scaled_times.end(), -1.0);
    r.censored =
        static_cast<std::int64_t>(r.scaled_times.end() - censored_it);
    r.scaled_times.erase(censored_it, r.scaled_times.end());
    if (static_cast<double>(r.censored) / exp.n_paths > 1e-3)
      throw std::runtime_error(
          "simulate_hit_times_coarsened: censored fraction exceeds 1e-3");
  }
  return results;
}

KsReport ks_compare(const std::vector<double>& samples,
                    const ContPoissonParams& reference) {
  reference.validate();
  if (samples.empty())
    throw std::domain_error("ks_compare: empty sample");
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double ks = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const double f = cpois_cdf(reference, sorted[i]);
    ks = std::max(ks, std::max(f - static_cast<double>(i) / n,
                               static_cast<double>(i + 1) / n - f));
  }
  KsReport report;
  report.ks_statistic = ks;
  report.n_samples = static_cast<std::int64_t>(sorted.size());
  report.critical_value_1pct = 1.63 / std::sqrt(n);
  return report;
}

}  // namespace contdist
