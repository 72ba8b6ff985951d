#ifndef CONTDIST_ERRORS_HPP
#define CONTDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace contdist {

// Thrown when an iterative or adaptive scheme fails to reach its tolerance.
// Carries the best estimate obtained so far and its error estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_estimate)
      : std::runtime_error(what),
        best_estimate(best_estimate),
        error_estimate(error_estimate) {}

  double best_estimate;
  double error_estimate;
};

}  // namespace contdist

#endif  // CONTDIST_ERRORS_HPP
