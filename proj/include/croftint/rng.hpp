#ifndef CROFTINT_RNG_HPP
#define CROFTINT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace croftint {

// Counter-based stream: every (seed, index) pair opens an independent
// deterministic generator, so Monte Carlo estimates do not depend on how
// samples are sharded across workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 seeder(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    std::uint64_t mixed = seeder.next_u64();
    return SplitMix64(mixed ^ index);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-1, 1].
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  // Standard Gaussian via Box-Muller; explicit so results are reproducible
  // across standard libraries.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = next_unit();
    } while (u1 <= 0.0);
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace croftint

#endif
