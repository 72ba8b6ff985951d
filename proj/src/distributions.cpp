#include "contdist/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "contdist/errors.hpp"
#include "contdist/special.hpp"

namespace contdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite(double x, const char* what) {
  if (std::isnan(x) || std::isinf(x)) throw std::domain_error(what);
}

void check_prob(double q) {
  if (!(q >= 0) || !(q <= 1))
    throw std::domain_error("quantile: q must lie in [0, 1]");
}

// Central difference, Richardson-extrapolated once. Differencing the CDF
// loses all precision once it saturates near 1, so the survival function
// (computed directly, not as 1 - cdf) is differenced in the upper tail.
template <typename Cdf, typename Sf>
double derivative_route(const Cdf& cdf, const Sf& sf, double x, double lo,
                        double hi) {
  double h = std::max(1e-5, 1e-7 * x);
  h = std::min(h, 0.5 * (x - lo));
  h = std::min(h, 0.5 * (hi - x));
  if (!(h > 0)) return 0.0;
  const bool upper_tail = cdf(x) > 0.5;
  const auto central = [&](double step) {
    if (upper_tail) return (sf(x - step) - sf(x + step)) / (2.0 * step);
    return (cdf(x + step) - cdf(x - step)) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

// Monotone-CDF inversion: bisection to width 1e-12, then two safeguarded
// Newton steps using the derivative-route density.
template <typename Cdf, typename Pdf>
double invert_cdf(const Cdf& cdf, const Pdf& pdf, double q, double lo,
                  double hi) {
  double flo = cdf(lo) - q;
  if (flo > 0) return lo;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, lo); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) - q <= 0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 2; ++i) {
    const double d = pdf(x);
    if (!(d > 0)) break;
    const double step = (cdf(x) - q) / d;
    const double xn = x - step;
    if (!(xn > lo) || !(xn < hi)) break;
    x = xn;
  }
  return x;
}

std::vector<double> draw_uniforms(RandomStream& stream, std::int64_t count) {
  if (count < 0) throw std::domain_error("sample: count must be >= 0");
  std::vector<double> u(static_cast<size_t>(count));
  for (auto& v : u) v = stream.next_uniform();
  return u;
}

}  // namespace

void ContPoissonParams::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::domain_error("ContPoissonParams: lambda must be > 0 and finite");
}

void ContBinomialParams::validate() const {
  if (!(n > 0) || !std::isfinite(n))
    throw std::domain_error("ContBinomialParams: n must be > 0 and finite");
  if (!(p > 0) || !(p < 1))
    throw std::domain_error("ContBinomialParams: p must lie in (0, 1)");
}

double cpois_cdf(const ContPoissonParams& params, double x) {
  params.validate();
  check_finite(x, "cpois_cdf: x must be finite");
  if (x <= 0) return 0.0;
  return reg_gamma_upper(x, params.lambda);
}

double cbinom_cdf(const ContBinomialParams& params, double x) {
  params.validate();
  check_finite(x, "cbinom_cdf: x must be finite");
  if (x <= 0) return 0.0;
  if (x >= params.n + 1.0) return 1.0;
  return reg_beta_upper(x, params.n + 1.0 - x, params.p);
}

double cpois_pdf(const ContPoissonParams& params, double x, DensityRoute route,
                 const QuadratureConfig& cfg) {
  params.validate();
  check_finite(x, "cpois_pdf: x must be finite");
  if (x <= 0) return 0.0;
  const double lambda = params.lambda;

  if (route == DensityRoute::derivative) {
    return derivative_route(
        [&](double y) { return cpois_cdf(params, y); },
        [&](double y) { return reg_gamma_lower(y, lambda); }, x, 0.0, kInf);
  }

  // Quotient-rule form of the CDF derivative:
  //   Gamma(x)^{-2} int_lambda^inf int_0^lambda
  //     e^{-(s+t)} (st)^{x-1} ln(t/s) ds dt,
  // a pointwise-positive integrand. Tolerances are purely relative so tail
  // densities (tiny absolute values) stay accurate.
  const double lg2 = 2.0 * log_gamma(x);
  QuadratureConfig outer_cfg = cfg;
  outer_cfg.abs_tol = 0.0;
  outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-12);
  QuadratureConfig inner = outer_cfg;
  inner.rel_tol = outer_cfg.rel_tol * 0.1;
  const auto outer = [&](double t) {
    const double lt = std::log(t);
    const auto kernel = [&](double s, double ls) {
      return std::exp((x - 1.0) * lt - s - t - lg2) * (lt - ls);
    };
    if (x >= 1.0) {
      const auto inner_f = [&](double s) {
        const double ls = std::log(s);
        return std::exp((x - 1.0) * ls) * kernel(s, ls);
      };
      return integrate(inner_f, 0.0, lambda, inner).value;
    }
    // For x < 1 the factor s^{x-1} blows up at 0; substituting w = s^x
    // gives s^{x-1} ds = dw / x and leaves only a log singularity.
    const auto inner_f = [&](double w) {
      const double ls = std::log(w) / x;
      return kernel(std::exp(ls), ls) / x;
    };
    return integrate(inner_f, 0.0, std::pow(lambda, x), inner).value;
  };
  return integrate(outer, lambda, kInf, outer_cfg).value;
}

double cbinom_pdf(const ContBinomialParams& params, double x,
                  DensityRoute route, const QuadratureConfig& cfg) {
  params.validate();
  check_finite(x, "cbinom_pdf: x must be finite");
  const double n = params.n, p = params.p;
  if (x <= 0 || x >= n + 1.0) return 0.0;

  if (route == DensityRoute::derivative) {
    return derivative_route(
        [&](double y) { return cbinom_cdf(params, y); },
        [&](double y) {
          if (y >= n + 1.0) return 0.0;
          if (y <= 0.0) return 1.0;
          return reg_beta_lower(y, n + 1.0 - y, p);
        },
        x, 0.0, n + 1.0);
  }

  // Same quotient-rule expansion with the beta kernel; the logarithmic
  // factor ln(t(1-s)/(s(1-t))) is positive on s < p < t.
  const double b = n + 1.0 - x;
  const double logb = log_gamma(x) + log_gamma(b) - log_gamma(n + 1.0);
  QuadratureConfig outer_cfg = cfg;
  outer_cfg.abs_tol = 0.0;
  outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-12);
  QuadratureConfig inner = outer_cfg;
  inner.rel_tol = outer_cfg.rel_tol * 0.1;

  // Inner integral over s in (0, p); substitute w = s^x when x < 1 to
  // absorb the s^{x-1} endpoint singularity.
  const auto inner_int = [&](double lt, double l1t) {
    // The outer integrand supplies the (1-t)^{n-x} factor.
    const auto kernel = [&](double ls, double l1s) {
      return std::exp((x - 1.0) * lt + (n - x) * l1s - 2.0 * logb) *
             (lt + l1s - ls - l1t);
    };
    if (x >= 1.0) {
      const auto f = [&](double s) {
        const double ls = std::log(s);
        return std::exp((x - 1.0) * ls) * kernel(ls, std::log1p(-s));
      };
      return integrate(f, 0.0, p, inner).value;
    }
    const auto f = [&](double w) {
      const double ls = std::log(w) / x;
      return kernel(ls, std::log1p(-std::exp(ls))) / x;
    };
    return integrate(f, 0.0, std::pow(p, x), inner).value;
  };

  // Outer integral over t in (p, 1); substitute z = (1-t)^b when b < 1 to
  // absorb the (1-t)^{n-x} endpoint singularity at t = 1.
  if (b >= 1.0) {
    const auto outer = [&](double t) {
      const double l1t = std::log1p(-t);
      return std::exp((n - x) * l1t) * inner_int(std::log(t), l1t);
    };
    return integrate(outer, p, 1.0, outer_cfg).value;
  }
  const auto outer = [&](double z) {
    const double l1t = std::log(z) / b;
    const double t = -std::expm1(l1t);
    return inner_int(std::log(t), l1t) / b;
  };
  return integrate(outer, 0.0, std::pow(1.0 - p, b), outer_cfg).value;
}

double cpois_quantile(const ContPoissonParams& params, double q) {
  params.validate();
  check_prob(q);
  if (q == 0) return 0.0;
  if (q == 1) return kInf;
  const auto cdf = [&](double x) { return cpois_cdf(params, x); };
  double hi = params.lambda + 1.0;
  while (cdf(hi) < q) {
    hi *= 2.0;
    if (hi > 1e300)
      throw ConvergenceError("cpois_quantile: bracket not found", hi, 1.0);
  }
  return invert_cdf(
      cdf,
      [&](double x) { return cpois_pdf(params, x, DensityRoute::derivative); },
      q, 0.0, hi);
}

double cbinom_quantile(const ContBinomialParams& params, double q) {
  params.validate();
  check_prob(q);
  if (q == 0) return 0.0;
  if (q == 1) return params.n + 1.0;
  return invert_cdf(
      [&](double x) { return cbinom_cdf(params, x); },
      [&](double x) { return cbinom_pdf(params, x, DensityRoute::derivative); },
      q, 0.0, params.n + 1.0);
}

namespace {

template <typename Params, typename Quantile>
std::vector<double> sample_impl(const Params& params, RandomStream& stream,
                                std::int64_t count, const Quantile& quantile,
                                bool parallel) {
  params.validate();
  std::vector<double> u = draw_uniforms(stream, count);
  std::vector<double> out(u.size());
  const std::int64_t total = static_cast<std::int64_t>(u.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < total; ++i) out[i] = quantile(u[i]);
  } else {
    for (std::int64_t i = 0; i < total; ++i) out[i] = quantile(u[i]);
  }
  return out;
}

}  // namespace

std::vector<double> sample(const ContPoissonParams& params,
                           RandomStream& stream, std::int64_t count) {
  return sample_impl(
      params, stream, count,
      [&](double q) { return cpois_quantile(params, q); }, true);
}

std::vector<double> sample(const ContBinomialParams& params,
                           RandomStream& stream, std::int64_t count) {
  return sample_impl(
      params, stream, count,
      [&](double q) { return cbinom_quantile(params, q); }, true);
}

std::vector<double> sample_serial(const ContPoissonParams& params,
                                  RandomStream& stream, std::int64_t count) {
  return sample_impl(
      params, stream, count,
      [&](double q) { return cpois_quantile(params, q); }, false);
}

std::vector<double> sample_serial(const ContBinomialParams& params,
                                  RandomStream& stream, std::int64_t count) {
  return sample_impl(
      params, stream, count,
      [&](double q) { return cbinom_quantile(params, q); }, false);
}

double interval_mass(const ContPoissonParams& params, double x) {
  params.validate();
  if (!(x >= 0) || !std::isfinite(x))
    throw std::domain_error("interval_mass: x must be >= 0 and finite");
  const double lambda = params.lambda;
  const double lx = x == 0 ? 0.0 : x * std::log(lambda);
  return std::exp(-lambda + lx - log_gamma(x + 1.0));
}

double interval_mass(const ContBinomialParams& params, double x) {
  params.validate();
  if (!(x >= 0) || !(x <= params.n))
    throw std::domain_error("interval_mass: x must lie in [0, n]");
  const double n = params.n, p = params.p;
  return std::exp(log_gamma(n + 1.0) - log_gamma(x + 1.0) -
                  log_gamma(n - x + 1.0) + x * std::log(p) +
                  (n - x) * std::log1p(-p));
}

double classical_poisson_cdf(double lambda, double x) {
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw std::domain_error("classical_poisson_cdf: lambda must be > 0");
  if (x <= 0) return 0.0;
  const long kmax = static_cast<long>(std::ceil(x)) - 1;
  const double ll = std::log(lambda);
  double sum = 0.0;
  for (long k = 0; k <= kmax; ++k)
    sum += std::exp(k * ll - lambda - log_gamma(k + 1.0));
  return std::min(sum, 1.0);
}

double classical_binomial_cdf(int n, double p, double x) {
  if (n < 1) throw std::domain_error("classical_binomial_cdf: n must be >= 1");
  if (!(p > 0) || !(p < 1))
    throw std::domain_error("classical_binomial_cdf: p must lie in (0, 1)");
  if (x <= 0) return 0.0;
  if (x > n) return 1.0;
  const long kmax = static_cast<long>(std::ceil(x)) - 1;
  const double lp = std::log(p), lq = std::log1p(-p);
  const double lgn = log_gamma(n + 1.0);
  double sum = 0.0;
  for (long k = 0; k <= kmax; ++k)
    sum += std::exp(lgn - log_gamma(k + 1.0) - log_gamma(n - k + 1.0) +
                    k * lp + (n - k) * lq);
  return std::min(sum, 1.0);
}

}  // namespace contdist
