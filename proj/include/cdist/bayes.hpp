#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdist/estimators.hpp"
#include "cdist/hypotheses.hpp"

namespace cdist {

/// Monte Carlo draws from a posterior over a scalar parameter.
struct PosteriorDraws {
  std::vector<double> draws;
  std::uint64_t seed = 0;
};

/// Flat-prior posterior of the mean difference (flat on both means and on
/// log sigma, common sigma): sigma^2 = (ss1 + ss2)/X with X ~ chi-squared
/// (n1 + n2 - 2), then difference ~ N(mean1 - mean2, sigma^2 (1/n1 + 1/n2)).
/// The marginal is exactly the pooled-t confidence distribution.
/// Deterministic for a fixed seed regardless of evaluation order.
PosteriorDraws posterior_mean_difference(const Sample& a, const Sample& b,
                                         std::size_t n_draws, std::uint64_t seed);

/// Fraction of draws falling inside the region.
TentativeProbability empirical_region_probability(const PosteriorDraws& draws,
                                                  const HypothesisRegion& region);

}  // namespace cdist
