#include "contdist/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace contdist {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  state_ = mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) +
                 stream_id * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t RandomStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double RandomStream::next_uniform() {
  // 53-bit mantissa, offset to keep the value strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

double RandomStream::next_gamma(double shape, double rate) {
  if (!(shape > 0) || !(rate > 0))
    throw std::domain_error("next_gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // G(a) = G(a + 1) * U^(1/a), exact for a in (0, 1).
    const double u = next_uniform();
    return next_gamma(shape + 1.0, rate) * std::exp(std::log(u) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v / rate;
  }
}

}  // namespace contdist
