// Compares the serial reference kernels against the OpenMP-parallel ones:
// quantile-based sampling and Gamma-process hitting-time simulation.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "contdist/distributions.hpp"
#include "contdist/gamma_process.hpp"
#include "contdist/random.hpp"

using namespace contdist;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_sampling() {
  const ContPoissonParams params{5.0};
  const std::size_t n = 20000;

  RandomStream s1(99, 0);
  auto t0 = clock_type::now();
  const auto serial = sample_serial(params, s1, n);
  const double ts = seconds_since(t0);

  RandomStream s2(99, 0);
  t0 = clock_type::now();
  const auto parallel = sample(params, s2, n);
  const double tp = seconds_since(t0);

  const bool equal = serial == parallel;
  std::printf("sampling      n=%zu   serial %.3fs   parallel %.3fs   "
              "speedup %.2fx   identical=%s\n",
              n, ts, tp, ts / tp, equal ? "yes" : "NO");
}

void bench_hit_times() {
  HitTimeExperiment exp;
  exp.level = 5.0;
  exp.dt = 4e-3;
  exp.n_paths = 20000;
  exp.seed = 99;

  auto t0 = clock_type::now();
  const auto serial = simulate_hit_times_serial(exp);
  const double ts = seconds_since(t0);

  t0 = clock_type::now();
  const auto parallel = simulate_hit_times(exp);
  const double tp = seconds_since(t0);

  const bool equal = serial.scaled_times == parallel.scaled_times;
  std::printf("hit-times     n=%d   serial %.3fs   parallel %.3fs   "
              "speedup %.2fx   identical=%s\n",
              exp.n_paths, ts, tp, ts / tp, equal ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif
  bench_sampling();
  bench_hit_times();
  return 0;
}
