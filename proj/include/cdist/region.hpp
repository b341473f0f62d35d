#pragma once

#include <string>
#include <vector>

namespace cdist {

/// One half-open [lower, upper) slice of the parameter axis. Either bound
/// may be infinite.
struct Interval {
  double lower;
  double upper;
};

/// A named union of disjoint intervals over the parameter axis, sorted
/// ascending, e.g. the "A >> B" region (1, +inf).
struct HypothesisRegion {
  std::string label;
  std::vector<Interval> intervals;

  /// Throws std::invalid_argument if any interval is empty or the intervals
  /// overlap or are out of order.
  void validate() const;
};

}  // namespace cdist
