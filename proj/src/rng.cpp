#include "cdist/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "cdist/dist.hpp"

namespace cdist {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGolden) ^ mix64(stream ^ 0xD1B54A32D192ED03ull))) {}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RandomStream::next_unit() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() { return normal_quantile(next_unit()); }

double RandomStream::next_gamma(double shape) {
  if (!(shape >= 1.0)) throw std::invalid_argument("next_gamma: shape must be >= 1");
  // Marsaglia & Tsang (2000) squeeze-accept method.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = next_normal();
    const double t = 1.0 + c * z;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = next_unit();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::next_chi_squared(double df) {
  if (!(df >= 2.0)) throw std::invalid_argument("next_chi_squared: df must be >= 2");
  return 2.0 * next_gamma(0.5 * df);
}

}  // namespace cdist
