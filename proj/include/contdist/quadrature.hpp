#ifndef CONTDIST_QUADRATURE_HPP
#define CONTDIST_QUADRATURE_HPP

#include <functional>
#include <limits>

namespace contdist {

// Tolerances and depth limits shared by every integral in the library.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 200;
  double tail_cutoff_tol = 1e-14;  // mass threshold for truncating infinite ranges

  void validate() const;
};

struct QuadratureResult {
  double value;
  double error_estimate;
};

// Adaptive 15-point Gauss-Kronrod quadrature of f over (a, b).
// b may be +infinity; the tail is folded onto (0,1) with t = a + u/(1-u).
// Endpoints are never evaluated, so integrable endpoint singularities
// (e.g. t^{-1/2} at 0) are allowed.
// Throws ConvergenceError with the best estimate attached when
// max_subdivisions is exhausted before the tolerance is met.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg = {});

}  // namespace contdist

#endif  // CONTDIST_QUADRATURE_HPP
