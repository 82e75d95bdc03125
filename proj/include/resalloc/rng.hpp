#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace resalloc {

// splitmix64 finalizer; used to derive independent stream seeds from a
// base seed plus integer tags (class id, dimension, instance index).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(base ^ 0x6a09e667f3bcc909ULL);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  return s;
}

// Seedable 64-bit random stream with the two draw kinds the instance
// generators need: U(a,b) strictly inside the open interval, and
// N(mu,sigma) via plain Box-Muller (always consumes exactly two uniform
// draws, so the stream position is a pure function of the draw counts).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Strictly inside (0,1): (k + 0.5) * 2^-53 with k drawn from 53 bits.
  double uniform01() {
    const std::uint64_t bits = engine_();
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  // Continuous uniform on the open interval (a, b), a < b. Rounding can
  // land the affine map on an endpoint; nudge back inside.
  double uniform(double a, double b) {
    double z = a + (b - a) * uniform01();
    if (z <= a) z = std::nextafter(a, b);
    if (z >= b) z = std::nextafter(b, a);
    return z;
  }

  double normal(double mu = 0.0, double sigma = 1.0) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * kTwoPi * u2);
  }

  std::uint64_t bits() { return engine_(); }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;

  std::mt19937_64 engine_;
};

}  // namespace resalloc
