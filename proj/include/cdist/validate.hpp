#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cdist {

/// One repeated-sampling calibration run: draw both groups from normal
/// populations with a common standard deviation, rebuild the pooled-t
/// confidence distribution each time, and check that its CDF evaluated at
/// the true difference is uniform.
struct CoverageScenario {
  double true_mean_a = 0.0;
  double true_mean_b = 0.0;
  double true_sd = 1.0;
  int n_per_group = 10;
  int replications = 10000;
  std::uint64_t seed = 0;
};

struct CoverageResult {
  double ks_distance = 0.0;           // empirical PIT values vs Uniform(0,1)
  double interval_coverage_95 = 0.0;  // fraction of 95% intervals containing the truth
  std::vector<double> pit;            // cd_cdf(true difference), one per replication
};

CoverageResult coverage_experiment(const CoverageScenario& scenario);

/// Kolmogorov-Smirnov sup distance between the empirical CDF of the values
/// and a reference CDF.
double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf);

/// KS distance of values in [0,1] against Uniform(0,1).
double ks_statistic_uniform(std::vector<double> values);

/// Asymptotic KS critical value at significance alpha = 0.01: 1.63/sqrt(n).
double ks_critical_alpha01(std::size_t n);

}  // namespace cdist
