#include "cdist/bayes.hpp"

#include <cmath>
#include <stdexcept>

#include "cdist/rng.hpp"

namespace cdist {

PosteriorDraws posterior_mean_difference(const Sample& a, const Sample& b,
                                         std::size_t n_draws, std::uint64_t seed) {
  if (n_draws < 1) throw std::invalid_argument("posterior_mean_difference: n_draws must be >= 1");
  const TwoSampleSummary s = summarize(a, b);
  const double ss = s.ss1 + s.ss2;
  if (ss <= 0.0)
    throw std::invalid_argument("posterior_mean_difference: degenerate (zero) variance");
  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  const double df = n1 + n2 - 2.0;
  const double center = s.mean1 - s.mean2;
  const double inv_n = 1.0 / n1 + 1.0 / n2;

  PosteriorDraws out;
  out.seed = seed;
  out.draws.resize(n_draws);
  for (std::size_t i = 0; i < n_draws; ++i) {
    RandomStream g(seed, i);
    const double sigma2 = ss / g.next_chi_squared(df);
    out.draws[i] = center + std::sqrt(sigma2 * inv_n) * g.next_normal();
  }
  return out;
}

TentativeProbability empirical_region_probability(const PosteriorDraws& draws,
                                                  const HypothesisRegion& region) {
  region.validate();
  if (draws.draws.empty())
    throw std::invalid_argument("empirical_region_probability: no draws");
  std::size_t hits = 0;
  for (double x : draws.draws) {
    for (const Interval& iv : region.intervals) {
      if (x > iv.lower && x <= iv.upper) {
        ++hits;
        break;
      }
    }
  }
  const double value = static_cast<double>(hits) / static_cast<double>(draws.draws.size());
  return {value, Method::BayesMc, BoundQualifier::Exact};
}

}  // namespace cdist
