#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "cdist/estimators.hpp"
#include "cdist/hypotheses.hpp"

using namespace cdist;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ConfidenceDistribution small_cd() {
  return ConfidenceDistribution::t_location_scale(0.3, 0.7, 18.0);
}

ConfidenceDistribution large_cd() {
  return ConfidenceDistribution::t_location_scale(0.3, 0.105131497, 798.0);
}

}  // namespace

TEST_CASE("parse_hypothesis grammar") {
  auto gt = parse_hypothesis("> 0");
  REQUIRE(gt.intervals.size() == 1);
  CHECK(gt.intervals[0].lower == 0.0);
  CHECK(gt.intervals[0].upper == kInf);
  CHECK(gt.label == "> 0");

  auto lt = parse_hypothesis("< -1");
  CHECK(lt.intervals[0].lower == -kInf);
  CHECK(lt.intervals[0].upper == -1.0);

  auto ge = parse_hypothesis(">= 2.5");
  CHECK(ge.intervals[0].lower == 2.5);
  auto le = parse_hypothesis("<= -0.25");
  CHECK(le.intervals[0].upper == -0.25);

  auto between = parse_hypothesis("between -1 and 1");
  REQUIRE(between.intervals.size() == 1);
  CHECK(between.intervals[0].lower == -1.0);
  CHECK(between.intervals[0].upper == 1.0);

  auto outside = parse_hypothesis("outside -1 and 1");
  REQUIRE(outside.intervals.size() == 2);
  CHECK(outside.intervals[0].upper == -1.0);
  CHECK(outside.intervals[1].lower == 1.0);

  // complement pairing: between + outside cover the line
  const auto cd = small_cd();
  CHECK(std::fabs(cd.region_mass(between) + cd.region_mass(outside) - 1.0) < 1e-12);

  CHECK(parse_hypothesis("  >   0.5  ").intervals[0].lower == 0.5);
  CHECK(parse_hypothesis(">-3").intervals[0].lower == -3.0);
}

TEST_CASE("parse_hypothesis errors carry a position") {
  CHECK_THROWS_AS(parse_hypothesis(""), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("about 3"), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("> "), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("> x"), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("between 2 and 1"), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("between 1 and"), HypothesisParseError);
  CHECK_THROWS_AS(parse_hypothesis("> 1 extra"), HypothesisParseError);
  try {
    parse_hypothesis("between 1 2");
  } catch (const HypothesisParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("region complement") {
  const auto r = parse_hypothesis("between -1 and 1");
  const auto c = region_complement(r);
  REQUIRE(c.intervals.size() == 2);
  CHECK(c.intervals[0].lower == -kInf);
  CHECK(c.intervals[0].upper == -1.0);
  CHECK(c.intervals[1].lower == 1.0);
  CHECK(c.intervals[1].upper == kInf);
  const auto whole = HypothesisRegion{"all", {{-kInf, kInf}}};
  CHECK(region_complement(whole).intervals.empty());
}

TEST_CASE("method 3 reproduces the published table rows") {
  const auto cd = small_cd();
  const double above0 = tp_cdf_direct(cd, parse_hypothesis("> 0")).value;
  CHECK(above0 > 0.6630);
  CHECK(above0 < 0.6640);
  CHECK(std::fabs(tp_cdf_direct(cd, parse_hypothesis("between -1 and 1")).value - 0.7946) <
        5e-4);
  CHECK(std::fabs(tp_cdf_direct(cd, parse_hypothesis("< -1")).value - 0.04) < 5e-4);

  const auto big = large_cd();
  CHECK(std::fabs(tp_cdf_direct(big, parse_hypothesis("> 0")).value - 0.998) < 5e-4);
  CHECK(tp_cdf_direct(big, parse_hypothesis("between -1 and 1")).value > 0.9999);

  const auto tp = tp_cdf_direct(cd, parse_hypothesis("> 0"));
  CHECK(tp.method == Method::CdfDirect);
  CHECK(tp.qualifier == BoundQualifier::Exact);
}

TEST_CASE("method 1 from p values") {
  auto split = tp_from_p({0.673, PValueRelation::Equals, EstimateSign::Positive});
  CHECK(std::fabs(split.positive.value - 0.6635) < 1e-12);
  CHECK(std::fabs(split.negative.value - 0.3365) < 1e-12);
  CHECK(split.positive.method == Method::PValueBridge);
  CHECK(split.positive.qualifier == BoundQualifier::Exact);

  split = tp_from_p({0.004, PValueRelation::Equals, EstimateSign::Positive});
  CHECK(std::fabs(split.positive.value - 0.998) < 1e-12);

  split = tp_from_p({0.001, PValueRelation::LessThan, EstimateSign::Positive});
  CHECK(split.positive.value > 0.9995 - 1e-12);
  CHECK(split.positive.qualifier == BoundQualifier::LowerBound);
  CHECK(split.negative.qualifier == BoundQualifier::UpperBound);

  split = tp_from_p({1.0, PValueRelation::Equals, EstimateSign::Positive});
  CHECK(split.positive.value == 0.5);
  CHECK(split.negative.value == 0.5);

  // negative estimates reverse the probabilities
  split = tp_from_p({0.2, PValueRelation::Equals, EstimateSign::Negative});
  CHECK(std::fabs(split.negative.value - 0.9) < 1e-12);
  CHECK(std::fabs(split.positive.value - 0.1) < 1e-12);

  CHECK_THROWS_AS(tp_from_p({0.0, PValueRelation::Equals, EstimateSign::Positive}),
                  std::domain_error);
  CHECK_THROWS_AS(tp_from_p({1.5, PValueRelation::Equals, EstimateSign::Positive}),
                  std::domain_error);
}

TEST_CASE("method 2 interval inversion on the worked example") {
  const auto cd = small_cd();
  const auto res = tp_interval_inversion(cd, 0.0);
  CHECK(std::fabs(res.level_found - 0.327) < 1e-3);
  CHECK(res.tp_above.value > 0.6630);
  CHECK(res.tp_above.value < 0.6640);
  CHECK(res.tp_above.method == Method::IntervalInversion);
  CHECK(!res.routed_to_cdf);

  const auto at_center = tp_interval_inversion(cd, 0.3);
  CHECK(at_center.level_found == 0.0);
  CHECK(at_center.tp_above.value == 0.5);

  const auto above_1 = tp_interval_inversion(cd, 1.0);
  const double direct = cd.region_mass({"", {{1.0, kInf}}});
  CHECK(std::fabs(above_1.tp_above.value - direct) < 1e-8);
  CHECK(std::fabs(above_1.tp_above.value - 0.1655) < 5e-4);  // displays as 17%
}

TEST_CASE("method 2 equals method 3 across thresholds (property)") {
  std::mt19937 gen(41);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  std::uniform_real_distribution<double> us(0.2, 2.5);
  std::uniform_real_distribution<double> udf(2.0, 300.0);
  std::uniform_real_distribution<double> uoff(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double center = uc(gen);
    const double scale = us(gen);
    const auto cd = ConfidenceDistribution::t_location_scale(center, scale, udf(gen));
    const double threshold = center + uoff(gen) * scale;
    const auto inv = tp_interval_inversion(cd, threshold);
    const double direct = cd.region_mass({"", {{threshold, kInf}}});
    CHECK(std::fabs(inv.tp_above.value - direct) < 1e-8);
  }
}

TEST_CASE("method 1 equals method 3 at a zero threshold") {
  for (bool use_large : {false, true}) {
    const auto cd = use_large ? large_cd() : small_cd();
    const double p = two_tailed_p(cd, 0.0);
    const auto split = tp_from_p({p, PValueRelation::Equals, EstimateSign::Positive});
    const double direct = cd.region_mass({"", {{0.0, kInf}}});
    CHECK(std::fabs(split.positive.value - direct) < 1e-12);
  }
}

TEST_CASE("asymmetric families route method 2 to method 3") {
  MonotoneTransform tf;
  tf.forward = [](double r) { return std::atanh(r); };
  tf.inverse = [](double z) { return std::tanh(z); };
  tf.derivative = [](double r) { return 1.0 / (1.0 - r * r); };
  tf.domain_lower = -1.0;
  tf.domain_upper = 1.0;
  const auto cd = ConfidenceDistribution::transformed_normal(std::atanh(0.3), 0.25, tf);
  const auto res = tp_interval_inversion(cd, 0.1);
  CHECK(res.routed_to_cdf);
  CHECK(res.tp_above.method == Method::CdfDirect);
  const double direct = cd.region_mass({"", {{0.1, kInf}}});
  CHECK(res.tp_above.value == direct);

  CHECK_THROWS_AS(tp_interval_inversion(ConfidenceDistribution::point_mass(1.0), 0.0),
                  std::domain_error);
}

TEST_CASE("hypothesis_table preserves order and partitions sum to one") {
  const auto cd = small_cd();
  const std::vector<HypothesisRegion> hs = {
      parse_hypothesis("> 0"), parse_hypothesis("< 0"), parse_hypothesis("> 1"),
      parse_hypothesis("between -1 and 1"), parse_hypothesis("< -1")};
  const auto rows = hypothesis_table(cd, hs);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].first == "> 0");
  CHECK(rows[4].first == "< -1");
  CHECK(format_percent(rows[0].second.value) == "66%");
  CHECK(format_percent(rows[1].second.value) == "34%");
  CHECK(format_percent(rows[2].second.value) == "17%");
  CHECK(format_percent(rows[3].second.value) == "79%");
  CHECK(format_percent(rows[4].second.value) == "4%");

  CHECK_THROWS_AS(hypothesis_table(cd, {}), std::invalid_argument);

  // random partitions of the line sum to one
  std::mt19937 gen(29);
  std::uniform_real_distribution<double> ucut(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    double c1 = ucut(gen), c2 = ucut(gen), c3 = ucut(gen);
    if (c1 > c2) std::swap(c1, c2);
    if (c2 > c3) std::swap(c2, c3);
    if (c1 > c2) std::swap(c1, c2);
    if (c1 == c2 || c2 == c3) continue;
    const std::vector<HypothesisRegion> parts = {
        {"", {{-kInf, c1}}}, {"", {{c1, c2}}}, {"", {{c2, c3}}}, {"", {{c3, kInf}}}};
    double total = 0.0;
    for (const auto& part : hypothesis_table(cd, parts)) total += part.second.value;
    CHECK(std::fabs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("large-sample display strings") {
  const auto big = large_cd();
  const std::vector<HypothesisRegion> hs = {
      parse_hypothesis("> 0"), parse_hypothesis("< 0"), parse_hypothesis("> 1"),
      parse_hypothesis("between -1 and 1"), parse_hypothesis("< -1")};
  const auto rows = hypothesis_table(big, hs);
  CHECK(format_percent(rows[0].second.value) == "99.8%");
  CHECK(format_percent(rows[1].second.value) == "0.2%");
  CHECK(format_percent(rows[2].second.value) == "0.0%");
  CHECK(format_percent(rows[3].second.value) == "100.0%");
  CHECK(format_percent(rows[4].second.value) == "0.0%");
}

TEST_CASE("enlarging a region never decreases its probability (property)") {
  std::mt19937 gen(53);
  std::uniform_real_distribution<double> ucut(-6.0, 6.0);
  const auto cd = small_cd();
  for (int i = 0; i < 200; ++i) {
    double a = ucut(gen), b = ucut(gen);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    const double grow = std::fabs(ucut(gen));
    const double inner = cd.region_mass({"", {{a, b}}});
    const double outer = cd.region_mass({"", {{a - grow, b + grow}}});
    CHECK(outer >= inner - 1e-15);
  }
}

TEST_CASE("format_percent rule") {
  CHECK(format_percent(0.66347) == "66%");
  CHECK(format_percent(0.33653) == "34%");
  CHECK(format_percent(0.16546) == "17%");
  CHECK(format_percent(0.79461) == "79%");
  CHECK(format_percent(0.03989) == "4%");
  CHECK(format_percent(0.9978) == "99.8%");
  CHECK(format_percent(0.0022) == "0.2%");
  CHECK(format_percent(0.9999999) == "100.0%");
  CHECK(format_percent(0.0000001) == "0.0%");
  CHECK(format_percent(1.0) == "100.0%");
  CHECK(format_percent(0.0) == "0.0%");
  CHECK(format_percent(0.995) == "99.5%");
  CHECK(format_percent(0.5) == "50%");
}
