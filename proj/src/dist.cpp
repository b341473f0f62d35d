#include "cdist/dist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cdist/specfun.hpp"

namespace cdist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrtTwo = 0.70710678118654752440;
constexpr double kSqrtTwoPi = 2.50662827463100050242;

void check_df(double df, const char* who) {
  if (!std::isfinite(df) || !(df > 0.0))
    throw std::domain_error(std::string(who) + ": df must be finite and > 0");
}

// Acklam's rational approximation to the normal quantile (relative error
// below 1.2e-9), refined afterwards with Halley steps against erfc.
double normal_quantile_estimate(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf(double z) {
  if (std::isnan(z)) throw std::domain_error("normal_cdf: z is NaN");
  return 0.5 * std::erfc(-z * kInvSqrtTwo);
}

double normal_pdf(double z) {
  if (std::isnan(z)) throw std::domain_error("normal_pdf: z is NaN");
  if (std::isinf(z)) return 0.0;
  return std::exp(-0.5 * z * z) / kSqrtTwoPi;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("normal_quantile: p must be in (0, 1)");
  double x = normal_quantile_estimate(p);
  for (int i = 0; i < 2; ++i) {
    const double err = normal_cdf(x) - p;
    const double pdf = normal_pdf(x);
    if (pdf <= 0.0) break;
    const double u = err / pdf;
    x -= u / (1.0 + 0.5 * x * u);  // Halley step
  }
  return x;
}

double t_cdf(double t, double df) {
  check_df(df, "t_cdf");
  if (std::isnan(t)) throw std::domain_error("t_cdf: t is NaN");
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  // Two algebraically equal routes through the incomplete beta; take the one
  // whose argument is small, so no beta argument is formed by cancellation.
  const double t2 = t * t;
  double half_tail;
  if (t2 < df)
    half_tail = 0.5 * (1.0 - reg_inc_beta(t2 / (df + t2), 0.5, 0.5 * df));
  else
    half_tail = 0.5 * reg_inc_beta(df / (df + t2), 0.5 * df, 0.5);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

double t_quantile(double p, double df) {
  check_df(df, "t_quantile");
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("t_quantile: p must be in (0, 1)");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -t_quantile(1.0 - p, df);

  // Bisection on t, bracket seeded from the normal quantile and expanded
  // until it straddles p (robust in the heavy tails at small df).
  double lo = 0.0;
  double hi = std::max(2.0 * normal_quantile(p), 1.0);
  while (t_cdf(hi, df) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw ConvergenceError("t_quantile: bracket expansion failed");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, mid))
      return mid;
    if (t_cdf(mid, df) > p)
      hi = mid;
    else
      lo = mid;
  }
  return mid;
}

double t_pdf(double t, double df) {
  check_df(df, "t_pdf");
  if (std::isnan(t)) throw std::domain_error("t_pdf: t is NaN");
  if (std::isinf(t)) return 0.0;
  const double half = 0.5 * (df + 1.0);
  const double log_norm =
      log_gamma(half) - log_gamma(0.5 * df) - 0.5 * std::log(df * kPi);
  return std::exp(log_norm - half * std::log1p(t * t / df));
}

}  // namespace cdist
