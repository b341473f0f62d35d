#include "cdist/hypotheses.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "cdist/specfun.hpp"

namespace cdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimal cursor-based scanner so parse errors can report a position.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool consume_word(std::string_view word) {
    skip_spaces();
    if (text.substr(pos, word.size()) != word) return false;
    const std::size_t end = pos + word.size();
    if (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) return false;
    pos = end;
    return true;
  }

  double parse_number(const char* what) {
    skip_spaces();
    const std::string rest(text.substr(pos));
    const char* begin = rest.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(value))
      throw HypothesisParseError(std::string("expected ") + what, pos);
    pos += static_cast<std::size_t>(end - begin);
    return value;
  }

  void expect_end() {
    skip_spaces();
    if (pos != text.size()) throw HypothesisParseError("unexpected trailing input", pos);
  }
};

std::string trimmed(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

HypothesisParseError::HypothesisParseError(const std::string& message, std::size_t pos)
    : std::invalid_argument("hypothesis parse error at position " + std::to_string(pos) +
                            ": " + message),
      position(pos) {}

const char* method_name(Method method) {
  switch (method) {
    case Method::PValueBridge: return "pvalue-bridge";
    case Method::IntervalInversion: return "interval-inversion";
    case Method::CdfDirect: return "cdf-direct";
    case Method::BayesMc: return "bayes-mc";
  }
  return "unknown";
}

const char* qualifier_name(BoundQualifier q) {
  switch (q) {
    case BoundQualifier::Exact: return "exact";
    case BoundQualifier::LowerBound: return "lower-bound";
    case BoundQualifier::UpperBound: return "upper-bound";
  }
  return "unknown";
}

HypothesisRegion parse_hypothesis(std::string_view text) {
  Scanner sc{text};
  HypothesisRegion region;
  region.label = trimmed(text);

  sc.skip_spaces();
  if (sc.pos == text.size()) throw HypothesisParseError("empty hypothesis", sc.pos);

  if (text.substr(sc.pos, 2) == ">=" || text.substr(sc.pos, 2) == "<=") {
    const bool greater = text[sc.pos] == '>';
    sc.pos += 2;
    const double c = sc.parse_number("a bound value");
    sc.expect_end();
    region.intervals = greater ? std::vector<Interval>{{c, kInf}}
                               : std::vector<Interval>{{-kInf, c}};
    return region;
  }
  if (text[sc.pos] == '>' || text[sc.pos] == '<') {
    const bool greater = text[sc.pos] == '>';
    ++sc.pos;
    const double c = sc.parse_number("a bound value");
    sc.expect_end();
    region.intervals = greater ? std::vector<Interval>{{c, kInf}}
                               : std::vector<Interval>{{-kInf, c}};
    return region;
  }
  if (sc.consume_word("between") || sc.consume_word("outside")) {
    const bool between = region.label[0] == 'b';
    const double a = sc.parse_number("the lower value");
    if (!sc.consume_word("and")) throw HypothesisParseError("expected 'and'", sc.pos);
    const double b = sc.parse_number("the upper value");
    sc.expect_end();
    if (!(a < b))
      throw HypothesisParseError("lower value must be less than upper value", 0);
    region.intervals = between ? std::vector<Interval>{{a, b}}
                               : std::vector<Interval>{{-kInf, a}, {b, kInf}};
    return region;
  }
  throw HypothesisParseError(
      "expected '>', '<', '>=', '<=', 'between' or 'outside'", sc.pos);
}

HypothesisRegion region_complement(const HypothesisRegion& region) {
  region.validate();
  HypothesisRegion out;
  out.label = "complement of " + region.label;
  double lower = -kInf;
  for (const Interval& iv : region.intervals) {
    if (lower < iv.lower) out.intervals.push_back({lower, iv.lower});
    lower = iv.upper;
  }
  if (lower < kInf) out.intervals.push_back({lower, kInf});
  return out;
}

TentativeProbability tp_cdf_direct(const ConfidenceDistribution& cd,
                                   const HypothesisRegion& region) {
  return {cd.region_mass(region), Method::CdfDirect, BoundQualifier::Exact};
}

SignSplit tp_from_p(const PValueInput& input) {
  if (!std::isfinite(input.p) || !(input.p > 0.0) || input.p > 1.0)
    throw std::domain_error("tp_from_p: p must be in (0, 1]");
  const double major = 1.0 - input.p / 2.0;
  const double minor = input.p / 2.0;
  const bool bound = input.relation == PValueRelation::LessThan;

  TentativeProbability major_tp{major, Method::PValueBridge,
                                bound ? BoundQualifier::LowerBound : BoundQualifier::Exact};
  TentativeProbability minor_tp{minor, Method::PValueBridge,
                                bound ? BoundQualifier::UpperBound : BoundQualifier::Exact};
  if (input.estimate_sign == EstimateSign::Positive) return {major_tp, minor_tp};
  return {minor_tp, major_tp};
}

InversionResult tp_interval_inversion(const ConfidenceDistribution& cd, double threshold) {
  if (!std::isfinite(threshold))
    throw std::domain_error("tp_interval_inversion: threshold must be finite");
  if (cd.is_point_mass())
    throw std::domain_error("tp_interval_inversion: unsupported for a point-mass distribution");

  if (cd.family() == Family::TransformedNormal) {
    // Equal-tail trial and error assumes a symmetric shape; fall back to
    // reading the mass off the distribution directly.
    const double above = cd.region_mass({{}, {{threshold, kInf}}});
    const double f = cd.cdf(threshold);
    InversionResult out;
    out.level_found = std::fabs(1.0 - 2.0 * f);
    out.tp_above = {above, Method::CdfDirect, BoundQualifier::Exact};
    out.routed_to_cdf = true;
    return out;
  }

  const double center = cd.center();
  if (threshold == center)
    return {0.0, {0.5, Method::IntervalInversion, BoundQualifier::Exact}, false};

  const bool below = threshold < center;
  // One endpoint of the level-c central interval sweeps monotonically from
  // the center (c -> 0) out to the tail (c -> 1); bisect on c until it
  // lands on the threshold.
  auto endpoint = [&](double level) {
    return below ? cd.quantile(0.5 * (1.0 - level)) : cd.quantile(0.5 * (1.0 + level));
  };
  double lo = 0.0;
  double hi = 1.0;
  double level = 0.5;
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    level = 0.5 * (lo + hi);
    const double e = endpoint(level);
    const bool endpoint_past_threshold = below ? e < threshold : e > threshold;
    if (endpoint_past_threshold)
      hi = level;
    else
      lo = level;
    if (hi - lo <= 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("tp_interval_inversion: level bisection did not converge");
  level = 0.5 * (lo + hi);
  const double above = below ? level + 0.5 * (1.0 - level) : 0.5 * (1.0 - level);
  return {level, {above, Method::IntervalInversion, BoundQualifier::Exact}, false};
}

std::vector<std::pair<std::string, TentativeProbability>> hypothesis_table(
    const ConfidenceDistribution& cd, const std::vector<HypothesisRegion>& hypotheses) {
  if (hypotheses.empty())
    throw std::invalid_argument("hypothesis_table: needs at least one hypothesis");
  std::vector<std::pair<std::string, TentativeProbability>> rows;
  rows.reserve(hypotheses.size());
  for (const HypothesisRegion& h : hypotheses)
    rows.emplace_back(h.label, tp_cdf_direct(cd, h));
  return rows;
}

std::string format_percent(double value) {
  const double pct = 100.0 * value;
  const long long nearest = std::llround(pct);
  char buf[40];
  if (nearest == 0 || nearest == 100 || pct >= 99.0)
    std::snprintf(buf, sizeof(buf), "%.1f%%", pct);
  else
    std::snprintf(buf, sizeof(buf), "%lld%%", nearest);
  return buf;
}

}  // namespace cdist
