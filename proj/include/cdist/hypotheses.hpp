#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdist/confdist.hpp"
#include "cdist/region.hpp"

namespace cdist {

enum class Method { PValueBridge, IntervalInversion, CdfDirect, BayesMc };
enum class BoundQualifier { Exact, LowerBound, UpperBound };

const char* method_name(Method method);          // "pvalue-bridge", ...
const char* qualifier_name(BoundQualifier q);    // "exact", "lower-bound", "upper-bound"

/// A confidence level for a hypothesis together with how it was obtained.
struct TentativeProbability {
  double value = 0.0;
  Method method = Method::CdfDirect;
  BoundQualifier qualifier = BoundQualifier::Exact;
};

enum class PValueRelation { Equals, LessThan };
enum class EstimateSign { Positive, Negative };

struct PValueInput {
  double p = 1.0;
  PValueRelation relation = PValueRelation::Equals;
  EstimateSign estimate_sign = EstimateSign::Positive;
};

struct SignSplit {
  TentativeProbability positive;
  TentativeProbability negative;
};

struct HypothesisParseError : std::invalid_argument {
  HypothesisParseError(const std::string& message, std::size_t position);
  std::size_t position;
};

/// Parses "> c", "< c", ">= c", "<= c", "between a and b" or
/// "outside a and b" into a region. The region label is the trimmed input.
HypothesisRegion parse_hypothesis(std::string_view text);

/// Complement of a region over the whole real line.
HypothesisRegion region_complement(const HypothesisRegion& region);

/// Method 3: read the mass of the region straight off the confidence distribution.
TentativeProbability tp_cdf_direct(const ConfidenceDistribution& cd,
                                   const HypothesisRegion& region);

/// Method 1: convert a two-tailed p value for a sign statistic into the
/// tentative probabilities that the population value is positive / negative.
SignSplit tp_from_p(const PValueInput& input);

struct InversionResult {
  double level_found = 0.0;          // central-interval level whose endpoint hits the threshold
  TentativeProbability tp_above;     // mass of (threshold, +inf)
  bool routed_to_cdf = false;        // true when an asymmetric family fell back to Method 3
};

/// Method 2: find by bisection the central-interval level with one endpoint
/// at the threshold, and read the mass above the threshold from it.
/// Asymmetric (transformed) families are routed to Method 3.
InversionResult tp_interval_inversion(const ConfidenceDistribution& cd, double threshold);

/// Method-3 probabilities for a list of hypotheses, preserving input order.
std::vector<std::pair<std::string, TentativeProbability>> hypothesis_table(
    const ConfidenceDistribution& cd, const std::vector<HypothesisRegion>& hypotheses);

/// Display rounding for report tables: one decimal when the value rounds to
/// 0% or 100% or is at least 99%, nearest whole percent otherwise.
std::string format_percent(double value);

}  // namespace cdist
