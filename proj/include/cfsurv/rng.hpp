#pragma once

#include <cmath>
#include <cstdint>

#include "cfsurv/types.hpp"

namespace cfsurv {

namespace detail {

// Stafford's mix13 finalizer; full 64-bit avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace detail

// Splittable counter-based generator (SplitMix64 core). Substreams are
// derived by hashing the parent key with caller-supplied indices, so any
// (seed, index...) tuple maps to the same sequence no matter which thread
// or loop order touches it first.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(detail::mix64(seed + kGamma)) {}

  Rng stream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
    std::uint64_t s = state_;
    s = detail::mix64(s ^ (a + kGamma));
    s = detail::mix64(s ^ (b + 2 * kGamma));
    s = detail::mix64(s ^ (c + 3 * kGamma));
    return Rng(FromState{}, s);
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return detail::mix64(state_);
  }

  // Uniform on (0, 1]; never returns 0 so logs are safe.
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Circularly symmetric complex normal, unit total variance.
  Complex cgaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
  }

 private:
  struct FromState {};
  Rng(FromState, std::uint64_t raw) : state_(raw) {}
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t state_;
};

} // namespace cfsurv
