#include "cdist/validate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdist/estimators.hpp"
#include "cdist/rng.hpp"

namespace cdist {

CoverageResult coverage_experiment(const CoverageScenario& scenario) {
  if (!(scenario.true_sd > 0.0) || !std::isfinite(scenario.true_sd))
    throw std::invalid_argument("coverage_experiment: true_sd must be finite and > 0");
  if (scenario.n_per_group < 2)
    throw std::invalid_argument("coverage_experiment: n_per_group must be >= 2");
  if (scenario.replications < 1)
    throw std::invalid_argument("coverage_experiment: replications must be >= 1");

  const double true_diff = scenario.true_mean_a - scenario.true_mean_b;
  CoverageResult result;
  result.pit.reserve(static_cast<std::size_t>(scenario.replications));
  std::size_t covered = 0;

  Sample a, b;
  a.values.resize(static_cast<std::size_t>(scenario.n_per_group));
  b.values.resize(static_cast<std::size_t>(scenario.n_per_group));
  for (int rep = 0; rep < scenario.replications; ++rep) {
    RandomStream g(scenario.seed, static_cast<std::uint64_t>(rep));
    for (double& v : a.values) v = scenario.true_mean_a + scenario.true_sd * g.next_normal();
    for (double& v : b.values) v = scenario.true_mean_b + scenario.true_sd * g.next_normal();
    const ConfidenceDistribution cd = mean_difference_cd(a, b, VarianceModel::Pooled);
    result.pit.push_back(cd.cdf(true_diff));
    const auto [lo, hi] = cd.central_interval(0.95);
    if (lo <= true_diff && true_diff <= hi) ++covered;
  }

  result.ks_distance = ks_statistic_uniform(result.pit);
  result.interval_coverage_95 =
      static_cast<double>(covered) / static_cast<double>(scenario.replications);
  return result;
}

double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_statistic: no values");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_statistic_uniform(std::vector<double> values) {
  return ks_statistic(std::move(values), [](double u) { return std::clamp(u, 0.0, 1.0); });
}

double ks_critical_alpha01(std::size_t n) {
  return 1.63 / std::sqrt(static_cast<double>(n));
}

}  // namespace cdist
