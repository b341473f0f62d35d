#include "cdist/confdist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdist/dist.hpp"

namespace cdist {

namespace {

void check_finite_center(double center) {
  if (!std::isfinite(center))
    throw std::invalid_argument("ConfidenceDistribution: center must be finite");
}

void check_scale(double scale) {
  if (!std::isfinite(scale) || !(scale > 0.0))
    throw std::invalid_argument("ConfidenceDistribution: scale must be finite and > 0");
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::TLocationScale: return "t-location-scale";
    case Family::NormalLocationScale: return "normal-location-scale";
    case Family::TransformedNormal: return "transformed-normal";
    case Family::PointMass: return "point-mass";
  }
  return "unknown";
}

ConfidenceDistribution::ConfidenceDistribution(Family family, double center, double scale,
                                               double df,
                                               std::optional<MonotoneTransform> transform,
                                               std::string label)
    : family_(family),
      center_(center),
      scale_(scale),
      df_(df),
      transform_(std::move(transform)),
      label_(std::move(label)) {}

ConfidenceDistribution ConfidenceDistribution::t_location_scale(double center, double scale,
                                                                double df, std::string label) {
  check_finite_center(center);
  check_scale(scale);
  if (!std::isfinite(df) || !(df > 0.0))
    throw std::invalid_argument("ConfidenceDistribution: df must be finite and > 0");
  return {Family::TLocationScale, center, scale, df, std::nullopt, std::move(label)};
}

ConfidenceDistribution ConfidenceDistribution::normal_location_scale(double center, double scale,
                                                                     std::string label) {
  check_finite_center(center);
  check_scale(scale);
  return {Family::NormalLocationScale, center, scale, 0.0, std::nullopt, std::move(label)};
}

ConfidenceDistribution ConfidenceDistribution::transformed_normal(double base_center,
                                                                  double base_scale,
                                                                  MonotoneTransform transform,
                                                                  std::string label) {
  check_finite_center(base_center);
  check_scale(base_scale);
  if (!transform.forward || !transform.inverse || !transform.derivative)
    throw std::invalid_argument("ConfidenceDistribution: transform maps must all be set");
  if (!(transform.domain_lower < transform.domain_upper))
    throw std::invalid_argument("ConfidenceDistribution: empty transform domain");
  return {Family::TransformedNormal, base_center, base_scale, 0.0, std::move(transform),
          std::move(label)};
}

ConfidenceDistribution ConfidenceDistribution::point_mass(double center, std::string label) {
  check_finite_center(center);
  return {Family::PointMass, center, 0.0, 0.0, std::nullopt, std::move(label)};
}

double ConfidenceDistribution::degrees_of_freedom() const {
  if (family_ != Family::TLocationScale)
    throw std::logic_error("degrees_of_freedom: only defined for the t family");
  return df_;
}

const MonotoneTransform* ConfidenceDistribution::transform() const {
  return transform_ ? &*transform_ : nullptr;
}

double ConfidenceDistribution::median() const {
  if (family_ == Family::TransformedNormal) return transform_->inverse(center_);
  return center_;
}

double ConfidenceDistribution::cdf(double theta) const {
  if (std::isnan(theta)) throw std::domain_error("cdf: theta is NaN");
  switch (family_) {
    case Family::TLocationScale:
      return t_cdf((theta - center_) / scale_, df_);
    case Family::NormalLocationScale:
      return normal_cdf((theta - center_) / scale_);
    case Family::TransformedNormal: {
      if (theta < transform_->domain_lower || theta > transform_->domain_upper)
        throw std::domain_error("cdf: theta outside the transform domain");
      const double z = transform_->forward(theta);
      return normal_cdf((z - center_) / scale_);
    }
    case Family::PointMass:
      return theta < center_ ? 0.0 : 1.0;
  }
  throw std::logic_error("cdf: unreachable");
}

double ConfidenceDistribution::quantile(double p) const {
  if (family_ == Family::PointMass)
    throw std::domain_error("quantile: unsupported for a point-mass distribution");
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p must be in (0, 1)");
  switch (family_) {
    case Family::TLocationScale:
      return center_ + scale_ * t_quantile(p, df_);
    case Family::NormalLocationScale:
      return center_ + scale_ * normal_quantile(p);
    case Family::TransformedNormal:
      return transform_->inverse(center_ + scale_ * normal_quantile(p));
    case Family::PointMass:
      break;
  }
  throw std::logic_error("quantile: unreachable");
}

double ConfidenceDistribution::density(double theta) const {
  if (family_ == Family::PointMass)
    throw std::domain_error("density: unsupported for a point-mass distribution");
  if (std::isnan(theta)) throw std::domain_error("density: theta is NaN");
  switch (family_) {
    case Family::TLocationScale:
      return t_pdf((theta - center_) / scale_, df_) / scale_;
    case Family::NormalLocationScale:
      return normal_pdf((theta - center_) / scale_) / scale_;
    case Family::TransformedNormal: {
      if (theta < transform_->domain_lower || theta > transform_->domain_upper)
        throw std::domain_error("density: theta outside the transform domain");
      const double z = transform_->forward(theta);
      if (std::isinf(z)) return 0.0;  // domain boundary: density vanishes in the limit
      return normal_pdf((z - center_) / scale_) / scale_ * std::fabs(transform_->derivative(theta));
    }
    case Family::PointMass:
      break;
  }
  throw std::logic_error("density: unreachable");
}

std::pair<double, double> ConfidenceDistribution::central_interval(double level) const {
  if (!(level > 0.0 && level < 1.0))
    throw std::domain_error("central_interval: level must be in (0, 1)");
  const double tail = 0.5 * (1.0 - level);
  return {quantile(tail), quantile(1.0 - tail)};
}

double ConfidenceDistribution::region_mass(const HypothesisRegion& region) const {
  region.validate();
  double mass = 0.0;
  for (const Interval& iv : region.intervals) {
    const double upper_mass = std::isinf(iv.upper) ? 1.0 : cdf(iv.upper);
    const double lower_mass = std::isinf(iv.lower) ? 0.0 : cdf(iv.lower);
    mass += upper_mass - lower_mass;
  }
  return std::clamp(mass, 0.0, 1.0);
}

void HypothesisRegion::validate() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (std::isnan(iv.lower) || std::isnan(iv.upper))
      throw std::invalid_argument("HypothesisRegion: interval bound is NaN");
    if (!(iv.lower < iv.upper))
      throw std::invalid_argument("HypothesisRegion: interval lower must be < upper");
    if (i > 0 && !(intervals[i - 1].upper <= iv.lower))
      throw std::invalid_argument("HypothesisRegion: intervals must be disjoint and sorted");
  }
}

}  // namespace cdist
