#ifndef CONTDIST_SPECIAL_HPP
#define CONTDIST_SPECIAL_HPP

#include "contdist/quadrature.hpp"

namespace contdist {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Regularized upper incomplete gamma Q(x, lambda) = Gamma(x, lambda)/Gamma(x).
// Series for the lower function when lambda < x + 1, continued fraction for
// the upper function otherwise; assembled in log space.
double reg_gamma_upper(double x, double lambda);

// Regularized lower incomplete gamma P(x, lambda) = 1 - Q(x, lambda),
// computed directly to avoid cancellation in tails.
double reg_gamma_lower(double x, double lambda);

// Regularized upper (tail) incomplete beta: B(x, y, p)/B(x, y) with
// B(x, y, p) = int_p^1 t^{x-1}(1-t)^{y-1} dt.
double reg_beta_upper(double x, double y, double p);

// Regularized lower incomplete beta I_p(x, y) = 1 - reg_beta_upper(x, y, p),
// computed directly so small head masses keep relative accuracy.
double reg_beta_lower(double x, double y, double p);

struct VolterraArgs {
  double t;      // >= 0
  double alpha;  // >= -1 supported
  double beta;   // > -1
  void validate() const;
};

// Volterra mu-function:
//   mu(t, alpha, beta) = int_0^inf t^{x+alpha} x^beta
//                        / (Gamma(beta+1) Gamma(x+alpha+1)) dx.
// The infinite range is truncated where the integrand envelope drops below
// cfg.tail_cutoff_tol (doubled for safety).
double volterra_mu(const VolterraArgs& args, const QuadratureConfig& cfg = {});

// Volterra nu-function: nu(t) = mu(t, 0, 0).
double volterra_nu(double t, const QuadratureConfig& cfg = {});

}  // namespace contdist

#endif  // CONTDIST_SPECIAL_HPP
