#ifndef CONTDIST_DISTRIBUTIONS_HPP
#define CONTDIST_DISTRIBUTIONS_HPP

#include <cstdint>
#include <vector>

#include "contdist/quadrature.hpp"
#include "contdist/random.hpp"

namespace contdist {

// Continuous Poisson law on [0, inf): CDF(x) = Gamma(x, lambda)/Gamma(x).
struct ContPoissonParams {
  double lambda;  // intensity, > 0
  void validate() const;
};

// Continuous binomial law on [0, n+1]: CDF(x) = B(x, n+1-x, p)/B(x, n+1-x).
// n is real-valued; it need not be an integer.
struct ContBinomialParams {
  double n;  // > 0
  double p;  // in (0, 1)
  void validate() const;
};

// Two independent routes for the density; they share no code path, so their
// agreement is the strongest internal correctness check.
enum class DensityRoute { derivative, double_integral };

double cpois_cdf(const ContPoissonParams& params, double x);
double cbinom_cdf(const ContBinomialParams& params, double x);

double cpois_pdf(const ContPoissonParams& params, double x, DensityRoute route,
                 const QuadratureConfig& cfg = {});
double cbinom_pdf(const ContBinomialParams& params, double x,
                  DensityRoute route, const QuadratureConfig& cfg = {});

// Inverse CDF. quantile(0) = 0; cbinom_quantile(1) = n + 1;
// cpois_quantile(1) = +infinity.
double cpois_quantile(const ContPoissonParams& params, double q);
double cbinom_quantile(const ContBinomialParams& params, double q);

// Inverse-CDF sampling: count values quantile(U_i) for consecutive uniforms.
// sample() evaluates the quantiles in parallel when OpenMP is enabled;
// sample_serial() is the plain-loop reference. Both return identical output
// for identical streams.
std::vector<double> sample(const ContPoissonParams& params,
                           RandomStream& stream, std::int64_t count);
std::vector<double> sample(const ContBinomialParams& params,
                           RandomStream& stream, std::int64_t count);
std::vector<double> sample_serial(const ContPoissonParams& params,
                                  RandomStream& stream, std::int64_t count);
std::vector<double> sample_serial(const ContBinomialParams& params,
                                  RandomStream& stream, std::int64_t count);

// Closed-form mass of [x, x+1):
//   Poisson:  e^{-lambda} lambda^x / Gamma(x+1)
//   binomial: Gamma(n+1)/(Gamma(x+1) Gamma(n-x+1)) p^x (1-p)^{n-x}
double interval_mass(const ContPoissonParams& params, double x);
double interval_mass(const ContBinomialParams& params, double x);

// Classical discrete laws by log-space summation; integer-point oracles.
double classical_poisson_cdf(double lambda, double x);
double classical_binomial_cdf(int n, double p, double x);

}  // namespace contdist

#endif  // CONTDIST_DISTRIBUTIONS_HPP
