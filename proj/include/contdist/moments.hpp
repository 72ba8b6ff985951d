#ifndef CONTDIST_MOMENTS_HPP
#define CONTDIST_MOMENTS_HPP

#include "contdist/quadrature.hpp"

namespace contdist {

// Two algebraically independent routes to the k-th moment of the continuous
// Poisson law:
//   volterra:      m_k = k! int_0^lambda e^{-t} mu(t, -1, k-1) dt
//   tail_integral: m_k = k  int_0^inf x^{k-1} (1 - CDF(x)) dx
enum class MomentRoute { volterra, tail_integral };

struct MomentRequest {
  double lambda;  // > 0
  int k;          // moment order, >= 0
  MomentRoute route = MomentRoute::tail_integral;
  void validate() const;
};

// m_k(lambda); m_0 = 1 by convention.
double moment(const MomentRequest& req, const QuadratureConfig& cfg = {});

// Closed-form Laplace transform of the moment function:
//   m_hat_k(s) = k! / (s ln^k(1+s)), s > 0, k >= 1.
double moment_laplace(int k, double s);

struct DoubleLaplacePoint {
  double u;  // conjugate to x, >= 0
  double s;  // conjugate to lambda, > 0
  void validate() const;
};

// Closed-form double Laplace transform of the continuous Poisson family:
//   phi_hat(u, s) = (1/s) ln(1+s) / (u + ln(1+s)).
double double_laplace(const DoubleLaplacePoint& pt);

// Numeric Laplace transform int_0^inf e^{-st} mu(t, alpha, beta) dt for
// s > 1, used to verify the closed form 1/(s^{alpha+1} ln^{beta+1} s).
// Handles the integrable endpoint blow-up of mu(t, -1, beta) at t -> 0.
double volterra_laplace_numeric(double s, double alpha, double beta,
                                const QuadratureConfig& cfg = {});

}  // namespace contdist

#endif  // CONTDIST_MOMENTS_HPP
