#ifndef CONTDIST_RANDOM_HPP
#define CONTDIST_RANDOM_HPP

#include <cstdint>

namespace contdist {

// Seedable deterministic uniform-variate source. Identical (seed, stream_id)
// pairs reproduce identical sequences; distinct stream_id values give
// independent sequences, so parallel consumers each own a sub-stream.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // New stream derived from the same seed; owned by one caller at a time.
  RandomStream substream(std::uint64_t id) const {
    return RandomStream(seed_, id);
  }

  // Uniform on the open interval (0, 1).
  double next_uniform();

  // Standard normal (Box-Muller, second deviate cached).
  double next_normal();

  // Gamma(shape, rate) variate, exact for all shapes > 0
  // (Marsaglia-Tsang, with the power boost for shape < 1).
  double next_gamma(double shape, double rate);

  static constexpr const char* generator_name = "splitmix64";

 private:
  std::uint64_t next_u64();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace contdist

#endif  // CONTDIST_RANDOM_HPP
