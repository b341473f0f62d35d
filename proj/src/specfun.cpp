#include "cdist/specfun.hpp"

#include <cmath>
#include <limits>

namespace cdist {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

void check_accuracy(const Accuracy& acc) {
  if (!(acc.abs_tol > 0.0) || acc.max_iter < 1)
    throw std::invalid_argument("Accuracy: abs_tol must be > 0 and max_iter >= 1");
}

// Continued fraction for I_x(a,b), evaluated with the modified Lentz scheme.
// Caller guarantees x is on the fast-convergence side of the symmetry switch.
double beta_cont_fraction(double x, double a, double b, const Accuracy& acc) {
  const double tiny = 1e-300;
  const double eps = std::max(acc.abs_tol * 1e-3, 4.0 * std::numeric_limits<double>::epsilon());

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= acc.max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) return h;
  }
  throw ConvergenceError("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: x must be finite and > 0");
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (x - 1.0 + i);
  const double t = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(series);
}

double reg_inc_beta(double x, double a, double b, const Accuracy& acc) {
  check_accuracy(acc);
  if (!std::isfinite(x) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("reg_inc_beta: arguments must be finite");
  if (x < 0.0 || x > 1.0) throw std::domain_error("reg_inc_beta: x must be in [0, 1]");
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("reg_inc_beta: a and b must be > 0");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  // Symmetry switch keeps the continued fraction in its fast-convergence region.
  if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - reg_inc_beta(1.0 - x, b, a, acc);
  const double log_prefix = a * std::log(x) + b * std::log1p(-x) + log_gamma(a + b) -
                            log_gamma(a) - log_gamma(b);
  return std::exp(log_prefix) * beta_cont_fraction(x, a, b, acc) / a;
}

double inv_reg_inc_beta(double p, double a, double b, const Accuracy& acc) {
  check_accuracy(acc);
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw std::domain_error("inv_reg_inc_beta: p must be in [0, 1]");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(b > 0.0))
    throw std::domain_error("inv_reg_inc_beta: a and b must be finite and > 0");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  const double log_norm = log_gamma(a + b) - log_gamma(a) - log_gamma(b);
  auto beta_density = [&](double t) {
    return std::exp(log_norm + (a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t));
  };
  double lo = 0.0;
  double hi = 1.0;
  double x = a / (a + b);  // distribution mean as the starting point
  for (int it = 0; it < acc.max_iter; ++it) {
    double f = reg_inc_beta(x, a, b, acc) - p;
    if (std::fabs(f) <= acc.abs_tol) {
      // two Newton polish steps sharpen x to the density-limited resolution
      for (int k = 0; k < 2; ++k) {
        const double density = beta_density(x);
        if (!std::isfinite(density) || !(density > 0.0)) break;
        const double next = x - f / density;
        if (!(next > 0.0 && next < 1.0) || next == x) break;
        x = next;
        f = reg_inc_beta(x, a, b, acc) - p;
      }
      return x;
    }
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    // Newton proposal from the beta density; bisection when it leaves the bracket.
    double next = x - f / beta_density(x);
    if (!std::isfinite(next) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) return x;  // bracket exhausted at double resolution
    x = next;
  }
  throw ConvergenceError("inv_reg_inc_beta: did not converge");
}

}  // namespace cdist
