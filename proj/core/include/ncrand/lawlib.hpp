#pragma once

// Limit laws as first-class objects: Gaussian and semicircle densities, CDFs,
// exact even moments, an adaptive-quadrature cross-check, histograms, and the
// Kolmogorov-Smirnov distance against a closed-form reference CDF.

#include "ncrand/exact.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ncrand::lawlib {

struct GaussianLaw {
  double mean = 0.0;
  double sigma = 1.0;  // > 0
};

struct SemicircleLaw {
  double mean = 0.0;
  double radius = 2.0;  // > 0
};

struct EmpiricalLaw {
  std::vector<double> samples;  // sorted ascending, nonempty
  static EmpiricalLaw from_samples(std::vector<double> samples);
};

using SpectralLaw = std::variant<GaussianLaw, SemicircleLaw, EmpiricalLaw>;

/// Density at x; an empirical law has no density (throws std::invalid_argument).
double density(const SpectralLaw& law, double x);

/// CDF at x. The semicircle CDF is closed-form; the empirical CDF is the
/// right-continuous step function.
double cdf(const SpectralLaw& law, double x);

enum class MomentKind { standard_gaussian, standard_semicircle };

/// Exact n-th moment: 0 for odd n; (2k-1)!! for the Gaussian and the Catalan
/// number C(2k, k)/(k+1) for the semicircle at n = 2k.
BigInt exact_moment(MomentKind kind, int n);

/// Moment by adaptive quadrature (absolute tolerance 1e-9, at most 1e6
/// evaluations); for an empirical law, the sample moment. The Gaussian
/// integral is truncated at mean +- 12 sigma, whose tail contribution is below
/// 1e-20 for n <= 12; the semicircle integrand is evaluated under the
/// trigonometric substitution that removes the edge singularity.
double numeric_moment(const SpectralLaw& law, int n);

/// sup_x |empirical CDF - reference CDF|, evaluated on both sides of every
/// sample jump. The reference must be gaussian or semicircle.
double ks_distance(const EmpiricalLaw& sample, const SpectralLaw& reference);

struct HistogramBin {
  double left;
  double right;
  std::size_t count;
  double density_estimate;
};

std::vector<HistogramBin> histogram(std::span<const double> samples, int bins, double lo, double hi);

/// CSV with columns bin_left, bin_right, count, density_estimate.
std::string histogram_csv(std::span<const HistogramBin> bins);

}  // namespace ncrand::lawlib
