#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdist/confdist.hpp"
#include "cdist/hypotheses.hpp"

#include "json.hpp"

namespace cdist {

struct GroupSummary {
  std::string label;
  std::size_t n = 0;
  std::optional<double> mean;  // absent for pair data
};

struct HypothesisRow {
  std::string label;
  std::string region_text;
  TentativeProbability tp;
  std::optional<double> bayes_value;  // set when the Bayes cross-check ran
};

/// Everything one analysis produces; rendered as a text table or as JSON
/// with full-precision probabilities.
struct AnalysisReport {
  std::string statistic;
  std::vector<GroupSummary> groups;
  std::string family;
  double center = 0.0;
  double scale = 0.0;
  std::optional<double> df;
  std::optional<std::string> variance_model;
  std::optional<double> two_tailed_p;
  std::optional<std::pair<double, double>> ci_95;
  std::vector<HypothesisRow> rows;
  std::optional<std::uint64_t> bayes_seed;
  std::optional<std::size_t> bayes_draws;
  std::optional<std::string> method_note;
};

std::string render_text(const AnalysisReport& report);
nlohmann::json to_json(const AnalysisReport& report);

/// Fills the statistic/family/center/scale/df/ci fields from a constructed
/// confidence distribution (the 95% interval collapses to the center for a
/// point mass).
void describe_distribution(AnalysisReport& report, const ConfidenceDistribution& cd);

}  // namespace cdist
