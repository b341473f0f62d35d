#pragma once

namespace cdist {

// Student-t and standard normal distribution functions. Degrees of freedom
// are real-valued (df > 0) so Welch-Satterthwaite values need no special case.

/// P(T <= t) for Student-t with df degrees of freedom.
double t_cdf(double t, double df);

/// t with t_cdf(t, df) = p, for p in (0, 1).
double t_quantile(double p, double df);

/// Student-t density at t.
double t_pdf(double t, double df);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile, for p in (0, 1).
double normal_quantile(double p);

/// Standard normal density.
double normal_pdf(double z);

}  // namespace cdist
