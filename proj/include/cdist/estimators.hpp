#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdist/confdist.hpp"

namespace cdist {

/// An ordered sequence of real observations from one group.
struct Sample {
  std::vector<double> values;
  std::string label;
};

struct TwoSampleSummary {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double ss1 = 0.0;  // sum of squared deviations from the group mean
  double ss2 = 0.0;
};

enum class VarianceModel { Pooled, Welch };

double sample_mean(std::span<const double> values);

/// Sum of squared deviations from the sample mean.
double sample_ss(std::span<const double> values);

TwoSampleSummary summarize(const Sample& a, const Sample& b);

/// Confidence distribution for the difference of two group means (a - b).
/// Pooled: t(mean1 - mean2, sqrt(s2p/n1 + s2p/n2), n1 + n2 - 2) with
/// s2p = (ss1 + ss2)/(n1 + n2 - 2). Welch: unpooled scale with
/// Welch-Satterthwaite df. Zero combined variance degenerates to a point mass.
ConfidenceDistribution mean_difference_cd(const Sample& a, const Sample& b,
                                          VarianceModel model = VarianceModel::Pooled);

/// Two-tailed p value of cd against a point null: 2 * min(F(x0), 1 - F(x0)).
double two_tailed_p(const ConfidenceDistribution& cd, double null_value);

/// Confidence distribution for a single group mean: t(mean, s/sqrt(n), n - 1).
ConfidenceDistribution one_sample_mean_cd(const Sample& a);

/// Wald normal approximation for the difference of two proportions k1/n1 - k2/n2.
ConfidenceDistribution proportion_difference_cd(long k1, long n1, long k2, long n2);

/// True when either group has fewer than 5 successes or failures, where the
/// Wald approximation is known to be poor.
bool proportion_small_counts(long k1, long n1, long k2, long n2);

/// Fisher-z confidence distribution for the Pearson correlation of (x, y) pairs.
ConfidenceDistribution correlation_cd(const std::vector<std::pair<double, double>>& pairs);

/// Confidence distribution for the least-squares slope of y on x.
ConfidenceDistribution slope_cd(const std::vector<std::pair<double, double>>& pairs);

/// k concatenated copies of a sample; the mean is unchanged and the sum of
/// squared deviations scales by exactly k.
Sample replicate_sample(const Sample& a, int k);

}  // namespace cdist
