#ifndef CONTDIST_CONVERGENCE_HPP
#define CONTDIST_CONVERGENCE_HPP

#include <functional>
#include <iosfwd>
#include <vector>

namespace contdist {

// Law-of-rare-events experiment: continuous binomial laws with N p -> lambda
// measured against the continuous Poisson limit on a fixed grid.
struct ConvergenceExperiment {
  double lambda = 2.0;
  std::vector<double> n_schedule = {16, 64, 256, 1024, 4096};
  std::vector<double> grid;  // evaluation points; filled by default_grid()
  // N -> p mapping; defaults to p = lambda / N.
  std::function<double(double)> p_rule;

  // 200 uniform points on [0, lambda + 6 sqrt(lambda) + 4] plus all
  // half-integers in that range.
  static std::vector<double> default_grid(double lambda);

  void validate() const;
};

struct ConvergenceRecord {
  double n = 0;
  double p = 0;
  double sup_cdf_distance = 0;       // max over grid of |CDF difference|
  double sup_interval_distance = 0;  // max over grid of |mass difference|
};

struct ConvergenceReport {
  std::vector<ConvergenceRecord> records;
  bool monotone_decreasing = false;  // sup_cdf_distance decreasing along N
};

ConvergenceReport run_convergence(const ConvergenceExperiment& exp);

struct IntervalMassCheck {
  double binomial_mass;
  double poisson_mass;
  double abs_diff;
};

// Closed-form interval masses on [x, x+1) for the two laws, and their gap.
IntervalMassCheck interval_mass_limit_check(double lambda, double n, double x);

void write_csv(const ConvergenceReport& report, std::ostream& os);
void write_json(const ConvergenceReport& report, std::ostream& os);

}  // namespace contdist

#endif  // CONTDIST_CONVERGENCE_HPP
