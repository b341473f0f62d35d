#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "cdist/region.hpp"

namespace cdist {

enum class Family { TLocationScale, NormalLocationScale, TransformedNormal, PointMass };

/// Name used in machine output ("t-location-scale", ...).
const char* family_name(Family family);

/// Strictly increasing reparametrization of a normal base distribution,
/// e.g. Fisher z for correlations. forward maps parameter to base space.
struct MonotoneTransform {
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  std::function<double(double)> derivative;  // d forward / d theta
  double domain_lower = -std::numeric_limits<double>::infinity();
  double domain_upper = std::numeric_limits<double>::infinity();
};

/// A distribution over a scalar parameter whose central intervals are
/// confidence intervals at every level. Immutable after construction.
class ConfidenceDistribution {
 public:
  static ConfidenceDistribution t_location_scale(double center, double scale, double df,
                                                 std::string label = {});
  static ConfidenceDistribution normal_location_scale(double center, double scale,
                                                      std::string label = {});
  /// base_center and base_scale live in the transformed (base) space.
  static ConfidenceDistribution transformed_normal(double base_center, double base_scale,
                                                   MonotoneTransform transform,
                                                   std::string label = {});
  static ConfidenceDistribution point_mass(double center, std::string label = {});

  /// Cumulative confidence mass at theta.
  double cdf(double theta) const;

  /// theta with cdf(theta) = p. Unsupported for the point-mass family.
  double quantile(double p) const;

  /// Density in parameter units (transformed families include the Jacobian).
  double density(double theta) const;

  /// Equal-tail interval: (quantile((1-level)/2), quantile((1+level)/2)).
  std::pair<double, double> central_interval(double level) const;

  /// Total confidence mass of a region: sum of cdf(upper) - cdf(lower) with
  /// infinite bounds contributing mass endpoints 0 and 1.
  double region_mass(const HypothesisRegion& region) const;

  Family family() const { return family_; }
  bool is_point_mass() const { return family_ == Family::PointMass; }
  /// Location parameter; base-space for the transformed-normal family.
  double center() const { return center_; }
  /// Scale parameter; base-space for the transformed-normal family, 0 for point mass.
  double scale() const { return scale_; }
  /// Only defined for the t family.
  double degrees_of_freedom() const;
  /// Parameter value at cdf 0.5 (maps the base center through the inverse
  /// transform for transformed families; equals center() otherwise).
  double median() const;
  const std::string& label() const { return label_; }
  const MonotoneTransform* transform() const;

 private:
  ConfidenceDistribution(Family family, double center, double scale, double df,
                         std::optional<MonotoneTransform> transform, std::string label);

  Family family_;
  double center_;
  double scale_;
  double df_;
  std::optional<MonotoneTransform> transform_;
  std::string label_;
};

}  // namespace cdist
