#include "contdist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "contdist/errors.hpp"

namespace contdist {

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 0) || !(rel_tol >= 0))
    throw std::domain_error("QuadratureConfig: tolerances must be >= 0");
  if (abs_tol == 0 && rel_tol == 0)
    throw std::domain_error("QuadratureConfig: abs_tol and rel_tol both zero");
  if (max_subdivisions < 1)
    throw std::domain_error("QuadratureConfig: max_subdivisions < 1");
  if (!(tail_cutoff_tol > 0))
    throw std::domain_error("QuadratureConfig: tail_cutoff_tol must be > 0");
}

namespace {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule, on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

// One GK15 pass on [a, b]; returns the Kronrod value and |K15 - G7|-based
// error estimate in the segment record.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      const double fc = f(c);
      resk += kWgk[7] * fc;
      resg += kWg[3] * fc;
      break;
    }
    const double fsum = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = resk * h;
  const double diff = (resk - resg) * h;
  s.error = std::pow(200.0 * std::abs(diff), 1.5);
  s.error = std::min(std::abs(diff), std::max(s.error, 1e-300));
  return s;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a)) throw std::domain_error("integrate: lower limit must be finite");

  std::function<double(double)> g = f;
  double lo = a, hi = b;
  if (std::isinf(b)) {
    // t = a + u/(1-u) maps (0,1) onto (a, inf).
    g = [&f, a](double u) {
      const double w = 1.0 - u;
      const double t = a + u / w;
      return f(t) / (w * w);
    };
    lo = 0.0;
    hi = 1.0;
  } else if (!(b > a)) {
    if (b == a) return {0.0, 0.0};
    throw std::domain_error("integrate: requires b >= a");
  }

  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(cfg.max_subdivisions) + 1);
  segs.push_back(gk15(g, lo, hi));

  double total = segs[0].value;
  double err = segs[0].error;
  int splits = 0;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (splits >= cfg.max_subdivisions)
      throw ConvergenceError("integrate: max_subdivisions exceeded", total, err);
    // Split the segment with the largest error estimate.
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Segment old = segs[worst];
    const double mid = 0.5 * (old.a + old.b);
    if (!(old.a < mid && mid < old.b))
      throw ConvergenceError("integrate: interval underflow", total, err);
    const Segment left = gk15(g, old.a, mid);
    const Segment right = gk15(g, mid, old.b);
    segs[worst] = left;
    segs.push_back(right);
    total += left.value + right.value - old.value;
    err += left.error + right.error - old.error;
    ++splits;
    if (splits % 32 == 0) {
      // Re-accumulate to keep the running sums from drifting.
      total = 0.0;
      err = 0.0;
      for (const Segment& s : segs) {
        total += s.value;
        err += s.error;
      }
    }
  }
  return {total, err};
}

}  // namespace contdist
