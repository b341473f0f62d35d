#pragma once

#include <stdexcept>

namespace cdist {

/// Tolerance and iteration budget for the iterative special-function routines.
struct Accuracy {
  double abs_tol = 1e-12;
  int max_iter = 300;
};

/// Thrown when an iterative routine exhausts its iteration budget.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Regularized incomplete beta function I_x(a, b) for x in [0, 1], a, b > 0.
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});

/// Inverse of reg_inc_beta in x: returns x with I_x(a, b) = p, x in [0, 1].
double inv_reg_inc_beta(double p, double a, double b, const Accuracy& acc = {});

}  // namespace cdist
