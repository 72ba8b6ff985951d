#include "contdist/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "contdist/distributions.hpp"
#include "contdist/special.hpp"

namespace contdist {

namespace {

// t * mu(t, -1, b) evaluated at t = e^{-1/u}, via the substitution x = u y:
//   u^{b+1}/Gamma(b+1) int_0^inf e^{-y} y^b / Gamma(u y) dy.
// Stays finite where mu itself overflows (t -> 0 with alpha = -1).
double t_times_mu_small_t(double u, double b, const QuadratureConfig& cfg) {
  const double lgb = log_gamma(b + 1.0);
  const auto f = [&](double y) {
    const double yb = b == 0.0 ? 0.0 : b * std::log(y);
    return std::exp(-y + yb - lgb - log_gamma(u * y));
  };
  return std::pow(u, b + 1.0) * integrate(f, 0.0, 400.0, cfg).value;
}

}  // namespace

void MomentRequest::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::domain_error("MomentRequest: lambda must be > 0 and finite");
  if (k < 0) throw std::domain_error("MomentRequest: k must be >= 0");
}

double moment(const MomentRequest& req, const QuadratureConfig& cfg) {
  req.validate();
  cfg.validate();
  if (req.k == 0) return 1.0;
  const double lambda = req.lambda;
  const int k = req.k;

  if (req.route == MomentRoute::volterra) {
    // The integrand e^{-t} mu(t, -1, k-1) behaves like
    // k / (t ln^{k+1}(1/t)) as t -> 0: integrable, but with mass decaying
    // only like 1 / ln^k(1/eps), which plain subdivision cannot resolve.
    // Substituting u = 1/ln(1/t) on (0, t0) turns that segment into a
    // polynomially smooth integrand ~ u^{k-1}.
    const double b = k - 1.0;
    QuadratureConfig inner = cfg;
    inner.rel_tol = cfg.rel_tol * 0.1;

    const double t0 = std::min(lambda, 0.5);
    const double u0 = 1.0 / std::log(1.0 / t0);
    const auto g = [&](double u) {
      const double t = std::exp(-1.0 / u);
      return std::exp(-t) * t_times_mu_small_t(u, b, inner) / (u * u);
    };
    double total = integrate(g, 0.0, u0, cfg).value;
    if (lambda > t0) {
      const auto f = [&](double t) {
        return std::exp(-t) * volterra_mu({t, -1.0, b}, inner);
      };
      total += integrate(f, t0, lambda, cfg).value;
    }
    return std::exp(log_gamma(k + 1.0)) * total;
  }

  const auto f = [&](double x) {
    const double xk = k == 1 ? 1.0 : std::pow(x, k - 1);
    return k * xk * reg_gamma_lower(x, lambda);
  };
  const double kInf = std::numeric_limits<double>::infinity();
  return integrate(f, 0.0, kInf, cfg).value;
}

double moment_laplace(int k, double s) {
  if (k < 1) throw std::domain_error("moment_laplace: k must be >= 1");
  if (!(s > 0)) throw std::domain_error("moment_laplace: s must be > 0");
  return std::exp(log_gamma(k + 1.0)) /
         (s * std::pow(std::log1p(s), k));
}

void DoubleLaplacePoint::validate() const {
  if (!(u >= 0) || !std::isfinite(u))
    throw std::domain_error("DoubleLaplacePoint: u must be >= 0 and finite");
  if (!(s > 0) || !std::isfinite(s))
    throw std::domain_error("DoubleLaplacePoint: s must be > 0 and finite");
}

double double_laplace(const DoubleLaplacePoint& pt) {
  pt.validate();
  const double l = std::log1p(pt.s);
  return l / (pt.s * (pt.u + l));
}

double volterra_laplace_numeric(double s, double alpha, double beta,
                                const QuadratureConfig& cfg) {
  if (!(s > 1))
    throw std::domain_error("volterra_laplace_numeric: requires s > 1");
  cfg.validate();
  QuadratureConfig inner = cfg;
  inner.rel_tol = cfg.rel_tol * 0.1;

  // e^{-st} mu(t) decays like e^{-(s-1)t} for large t.
  double upper = 8.0;
  while (std::exp(-(s - 1.0) * upper) > 1e-18) upper += 8.0 / (s - 1.0);

  double total = 0.0;
  double lo = 0.0;
  if (alpha == -1.0) {
    // Integrable blow-up ~ 1/(t ln^{beta+2}(1/t)) at t -> 0; substitute
    // u = 1/ln(1/t) on (0, 1/2) as in the moment computation.
    const double t0 = 0.5;
    const double u0 = 1.0 / std::log(1.0 / t0);
    const auto g = [&](double u) {
      const double t = std::exp(-1.0 / u);
      return std::exp(-s * t) * t_times_mu_small_t(u, beta, inner) / (u * u);
    };
    total += integrate(g, 0.0, u0, cfg).value;
    lo = t0;
  }
  const auto f = [&](double t) {
    return std::exp(-s * t) * volterra_mu({t, alpha, beta}, inner);
  };
  total += integrate(f, lo, upper, cfg).value;
  return total;
}

}  // namespace contdist
