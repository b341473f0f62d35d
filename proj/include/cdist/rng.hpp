#pragma once

#include <cstdint>

namespace cdist {

/// Deterministic pseudo-random stream keyed by (seed, stream index).
/// Every stream is reproducible in isolation, so draw i can be generated on
/// any thread in any order and the result only depends on the key. The
/// generator is SplitMix64 with the stream key folded into the initial state.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform strictly inside (0, 1).
  double next_unit();

  /// Standard normal, by quantile inversion of next_unit().
  double next_normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang; requires shape >= 1.
  double next_gamma(double shape);

  /// Chi-squared with df degrees of freedom; requires df >= 2.
  double next_chi_squared(double df);

 private:
  std::uint64_t state_;
};

}  // namespace cdist
