#include "contdist/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "contdist/errors.hpp"

namespace contdist {

namespace {

constexpr int kMaxIter = 1000;
constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;

// Lower regularized gamma P(x, lambda) by power series, lambda < x + 1.
double gamma_p_series(double x, double lambda) {
  double ap = x;
  double sum = 1.0 / x;
  double del = sum;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= lambda / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps)
      return sum * std::exp(-lambda + x * std::log(lambda) - log_gamma(x));
  }
  throw ConvergenceError("reg_gamma: series did not converge",
                         sum * std::exp(-lambda + x * std::log(lambda) - log_gamma(x)),
                         std::abs(del));
}

// Upper regularized gamma Q(x, lambda) by Lentz continued fraction,
// lambda >= x + 1.
double gamma_q_contfrac(double x, double lambda) {
  double b = lambda + 1.0 - x;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - x);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps)
      return h * std::exp(-lambda + x * std::log(lambda) - log_gamma(x));
  }
  throw ConvergenceError("reg_gamma: continued fraction did not converge",
                         h * std::exp(-lambda + x * std::log(lambda) - log_gamma(x)),
                         std::numeric_limits<double>::quiet_NaN());
}

void check_gamma_args(double x, double lambda) {
  if (!(x > 0) || !std::isfinite(x))
    throw std::domain_error("reg_gamma: x must be positive and finite");
  if (!(lambda >= 0) || !std::isfinite(lambda))
    throw std::domain_error("reg_gamma: lambda must be >= 0 and finite");
}

// Continued fraction for the incomplete beta (Lentz).
double beta_contfrac(double a, double b, double p) {
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * p / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * p / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * p / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw ConvergenceError("reg_beta: continued fraction did not converge", h,
                         std::numeric_limits<double>::quiet_NaN());
}

// Lower regularized beta I_p(a, b).
double beta_i_lower(double a, double b, double p) {
  if (p <= 0) return 0.0;
  if (p >= 1) return 1.0;
  const double lbeta = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
  const double front =
      std::exp(a * std::log(p) + b * std::log1p(-p) - lbeta);
  if (p < (a + 1.0) / (a + b + 2.0))
    return front * beta_contfrac(a, b, p) / a;
  return 1.0 - front * beta_contfrac(b, a, 1.0 - p) / b;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: x must be positive and finite");
  return std::lgamma(x);
}

double reg_gamma_upper(double x, double lambda) {
  check_gamma_args(x, lambda);
  if (lambda == 0) return 1.0;
  if (lambda < x + 1.0) return 1.0 - gamma_p_series(x, lambda);
  return gamma_q_contfrac(x, lambda);
}

double reg_gamma_lower(double x, double lambda) {
  check_gamma_args(x, lambda);
  if (lambda == 0) return 0.0;
  if (lambda < x + 1.0) return gamma_p_series(x, lambda);
  return 1.0 - gamma_q_contfrac(x, lambda);
}

double reg_beta_upper(double x, double y, double p) {
  if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y))
    throw std::domain_error("reg_beta_upper: x, y must be positive and finite");
  if (!(p >= 0) || !(p <= 1))
    throw std::domain_error("reg_beta_upper: p must lie in [0, 1]");
  return 1.0 - beta_i_lower(x, y, p);
}

double reg_beta_lower(double x, double y, double p) {
  if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y))
    throw std::domain_error("reg_beta_lower: x, y must be positive and finite");
  if (!(p >= 0) || !(p <= 1))
    throw std::domain_error("reg_beta_lower: p must lie in [0, 1]");
  return beta_i_lower(x, y, p);
}

void VolterraArgs::validate() const {
  if (!(t >= 0) || !std::isfinite(t))
    throw std::domain_error("VolterraArgs: t must be >= 0 and finite");
  if (!(beta > -1))
    throw std::domain_error("VolterraArgs: beta must be > -1");
  if (!(alpha >= -1))
    throw std::domain_error("VolterraArgs: alpha >= -1 supported");
}

double volterra_mu(const VolterraArgs& args, const QuadratureConfig& cfg) {
  args.validate();
  cfg.validate();
  const double t = args.t, alpha = args.alpha, beta = args.beta;
  if (t == 0) {
    if (alpha > -1) return 0.0;  // integrand vanishes for x > 0
    throw std::domain_error("volterra_mu: t = 0 with alpha = -1 diverges");
  }
  const double logt = std::log(t);
  const double lgb = log_gamma(beta + 1.0);

  // Truncation point: smallest x with the integrand envelope below
  // tail_cutoff_tol, then doubled.
  // beta * log(x) written to avoid 0 * (-inf) at beta == 0.
  const auto xbeta = [beta](double x) {
    return beta == 0.0 ? 0.0 : beta * std::log(x);
  };
  const auto envelope = [&](double x) {
    return std::max(x, 1.0) * std::exp((x + alpha) * logt + xbeta(x) - lgb -
                                       log_gamma(x + alpha + 1.0));
  };
  double xstar = std::max(8.0, 2.0 * t);
  while (envelope(xstar) > cfg.tail_cutoff_tol) {
    xstar *= 1.25;
    if (xstar > 1e7)
      throw ConvergenceError("volterra_mu: truncation point not found", 0.0,
                             std::numeric_limits<double>::infinity());
  }
  xstar *= 2.0;

  const auto integrand = [&](double x) {
    return std::exp((x + alpha) * logt + xbeta(x) - lgb -
                    log_gamma(x + alpha + 1.0));
  };
  return integrate(integrand, 0.0, xstar, cfg).value;
}

double volterra_nu(double t, const QuadratureConfig& cfg) {
  return volterra_mu({t, 0.0, 0.0}, cfg);
}

}  // namespace contdist
