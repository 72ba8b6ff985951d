#ifndef CONTDIST_GAMMA_PROCESS_HPP
#define CONTDIST_GAMMA_PROCESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "contdist/distributions.hpp"
#include "contdist/random.hpp"

namespace contdist {

struct GammaProcessParams {
  double alpha;  // shape rate per unit time, > 0
  double beta;   // inverse scale, > 0
  void validate() const;
};

// Transition density of the Gamma process at time t:
//   f_t(x) = beta^{alpha t} / Gamma(alpha t) * x^{alpha t - 1} e^{-beta x}.
double transition_density(const GammaProcessParams& params, double t, double x);

struct HitTimeExperiment {
  GammaProcessParams process{1.0, 1.0};
  double level = 5.0;  // the level c
  double dt = 1e-3;
  std::int64_t n_paths = 100000;
  std::uint64_t seed = 0;
  // Safety horizon; <= 0 means "derive from the analytic law":
  // quantile(1 - 1e-6) of the scaled hit-time law, divided by alpha,
  // plus 10 grid steps.
  double t_max = 0.0;

  void validate() const;
  double resolved_t_max() const;
};

struct HitTimeResult {
  std::vector<double> scaled_times;  // alpha * tau_c per non-censored path
  std::int64_t censored = 0;
};

// Simulates n_paths Gamma-process paths on a uniform grid of step dt
// (increments are exact Gamma(alpha dt, beta) variates) and records
// alpha * (first grid time with cumulative sum > level). Paths use
// sub-stream = path index, so results do not depend on evaluation order.
// simulate_hit_times() runs paths in parallel when OpenMP is enabled;
// simulate_hit_times_serial() is the plain-loop reference.
HitTimeResult simulate_hit_times(const HitTimeExperiment& exp);
HitTimeResult simulate_hit_times_serial(const HitTimeExperiment& exp);

// One fine-grid pass per path, with crossing times also read off every
// coarsening of the grid by the given integer factors (increments over a
// coarse step are exact Gamma variates by additivity, so each coarsened
// result has exactly the law of a run at dt * factor). results[i]
// corresponds to factors[i]; factor 1 is the base run.
std::vector<HitTimeResult> simulate_hit_times_coarsened(
    const HitTimeExperiment& exp, const std::vector<int>& factors);

struct KsReport {
  double ks_statistic = 0;
  std::int64_t n_samples = 0;
  double critical_value_1pct = 0;  // 1.63 / sqrt(n)
  std::string discretization_note;
};

// Two-sided KS distance between the empirical CDF of the samples and the
// continuous Poisson CDF with the given parameter.
KsReport ks_compare(const std::vector<double>& samples,
                    const ContPoissonParams& reference);

}  // namespace contdist

#endif  // CONTDIST_GAMMA_PROCESS_HPP
