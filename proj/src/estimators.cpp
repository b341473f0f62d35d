#include "cdist/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace cdist {

namespace {

void check_sample(const Sample& s, std::size_t min_len, const char* who) {
  if (s.values.size() < min_len)
    throw std::invalid_argument(std::string(who) + ": sample needs at least " +
                                std::to_string(min_len) + " observations");
  for (double v : s.values)
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(who) + ": sample contains a non-finite value");
}

std::string group_label(const Sample& s, const char* fallback) {
  return s.label.empty() ? fallback : s.label;
}

}  // namespace

double sample_mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_ss(std::span<const double> values) {
  const double mean = sample_mean(values);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return ss;
}

TwoSampleSummary summarize(const Sample& a, const Sample& b) {
  check_sample(a, 2, "summarize");
  check_sample(b, 2, "summarize");
  TwoSampleSummary s;
  s.n1 = a.values.size();
  s.n2 = b.values.size();
  s.mean1 = sample_mean(a.values);
  s.mean2 = sample_mean(b.values);
  s.ss1 = sample_ss(a.values);
  s.ss2 = sample_ss(b.values);
  return s;
}

ConfidenceDistribution mean_difference_cd(const Sample& a, const Sample& b,
                                          VarianceModel model) {
  const TwoSampleSummary s = summarize(a, b);
  const double center = s.mean1 - s.mean2;
  const std::string label =
      "difference of means (" + group_label(a, "A") + " - " + group_label(b, "B") + ")";

  if (s.ss1 + s.ss2 == 0.0) return ConfidenceDistribution::point_mass(center, label);

  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  double scale;
  double df;
  if (model == VarianceModel::Pooled) {
    df = n1 + n2 - 2.0;
    const double s2p = (s.ss1 + s.ss2) / df;
    scale = std::sqrt(s2p / n1 + s2p / n2);
  } else {
    const double v1 = s.ss1 / (n1 - 1.0);
    const double v2 = s.ss2 / (n2 - 1.0);
    scale = std::sqrt(v1 / n1 + v2 / n2);
    if (s.n1 == s.n2 && s.ss1 == s.ss2) {
      // equal sample variances: Welch-Satterthwaite collapses to the pooled df
      df = n1 + n2 - 2.0;
    } else {
      const double t1 = v1 / n1;
      const double t2 = v2 / n2;
      df = (t1 + t2) * (t1 + t2) / (t1 * t1 / (n1 - 1.0) + t2 * t2 / (n2 - 1.0));
    }
  }
  return ConfidenceDistribution::t_location_scale(center, scale, df, label);
}

double two_tailed_p(const ConfidenceDistribution& cd, double null_value) {
  const double f = cd.cdf(null_value);
  return 2.0 * std::min(f, 1.0 - f);
}

ConfidenceDistribution one_sample_mean_cd(const Sample& a) {
  check_sample(a, 2, "one_sample_mean_cd");
  const double n = static_cast<double>(a.values.size());
  const double mean = sample_mean(a.values);
  const double ss = sample_ss(a.values);
  const std::string label = "mean of " + group_label(a, "sample");
  if (ss == 0.0) return ConfidenceDistribution::point_mass(mean, label);
  const double s = std::sqrt(ss / (n - 1.0));
  return ConfidenceDistribution::t_location_scale(mean, s / std::sqrt(n), n - 1.0, label);
}

ConfidenceDistribution proportion_difference_cd(long k1, long n1, long k2, long n2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("proportion_difference_cd: group sizes must be >= 1");
  if (k1 < 0 || k1 > n1 || k2 < 0 || k2 > n2)
    throw std::invalid_argument("proportion_difference_cd: counts must satisfy 0 <= k <= n");
  const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
  const double center = p1 - p2;
  const double var = p1 * (1.0 - p1) / static_cast<double>(n1) +
                     p2 * (1.0 - p2) / static_cast<double>(n2);
  const std::string label = "difference of proportions";
  if (var == 0.0) return ConfidenceDistribution::point_mass(center, label);
  return ConfidenceDistribution::normal_location_scale(center, std::sqrt(var), label);
}

bool proportion_small_counts(long k1, long n1, long k2, long n2) {
  return std::min(k1, n1 - k1) < 5 || std::min(k2, n2 - k2) < 5;
}

ConfidenceDistribution correlation_cd(const std::vector<std::pair<double, double>>& pairs) {
  const std::size_t n = pairs.size();
  if (n < 4) throw std::invalid_argument("correlation_cd: needs at least 4 pairs");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pairs) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("correlation_cd: non-finite coordinate");
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("correlation_cd: a coordinate is constant");
  const double r = sxy / std::sqrt(sxx * syy);
  if (!(std::fabs(r) < 1.0))
    throw std::domain_error("correlation_cd: |r| = 1, Fisher z transform undefined");

  MonotoneTransform fisher_z;
  fisher_z.forward = [](double rho) { return std::atanh(rho); };
  fisher_z.inverse = [](double z) { return std::tanh(z); };
  fisher_z.derivative = [](double rho) { return 1.0 / (1.0 - rho * rho); };
  fisher_z.domain_lower = -1.0;
  fisher_z.domain_upper = 1.0;
  return ConfidenceDistribution::transformed_normal(
      std::atanh(r), 1.0 / std::sqrt(static_cast<double>(n) - 3.0), std::move(fisher_z),
      "correlation coefficient");
}

ConfidenceDistribution slope_cd(const std::vector<std::pair<double, double>>& pairs) {
  const std::size_t n = pairs.size();
  if (n < 3) throw std::invalid_argument("slope_cd: needs at least 3 pairs");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pairs) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("slope_cd: non-finite coordinate");
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope_cd: x is constant");
  const double slope = sxy / sxx;
  const double residual_ss = std::max(0.0, syy - sxy * sxy / sxx);
  const std::string label = "regression slope";
  if (residual_ss == 0.0) return ConfidenceDistribution::point_mass(slope, label);
  const double df = static_cast<double>(n) - 2.0;
  const double residual_se = std::sqrt(residual_ss / df);
  return ConfidenceDistribution::t_location_scale(slope, residual_se / std::sqrt(sxx), df,
                                                  label);
}

Sample replicate_sample(const Sample& a, int k) {
  if (k < 1) throw std::invalid_argument("replicate_sample: k must be >= 1");
  Sample out;
  out.label = a.label;
  out.values.reserve(a.values.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    out.values.insert(out.values.end(), a.values.begin(), a.values.end());
  return out;
}

}  // namespace cdist
