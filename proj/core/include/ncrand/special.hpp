#pragma once

#include <stdexcept>
#include <string>

namespace ncrand {

/// Raised when an iterative numeric routine exceeds its evaluation budget;
/// the CLI maps it to exit code 3.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse of normal_cdf by bisection, |result error| <= 1e-13.
double normal_quantile(double p);

/// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

}  // namespace ncrand
