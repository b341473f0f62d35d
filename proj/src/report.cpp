#include "cdist/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cdist {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string qualified_percent(const TentativeProbability& tp) {
  switch (tp.qualifier) {
    case BoundQualifier::LowerBound: return "> " + format_percent(tp.value);
    case BoundQualifier::UpperBound: return "< " + format_percent(tp.value);
    case BoundQualifier::Exact: break;
  }
  return format_percent(tp.value);
}

}  // namespace

void describe_distribution(AnalysisReport& report, const ConfidenceDistribution& cd) {
  report.statistic = cd.label();
  report.family = family_name(cd.family());
  report.center = cd.median();  // parameter-space estimate for every family
  report.scale = cd.scale();
  if (cd.family() == Family::TLocationScale) report.df = cd.degrees_of_freedom();
  if (cd.is_point_mass())
    report.ci_95 = std::make_pair(cd.center(), cd.center());
  else
    report.ci_95 = cd.central_interval(0.95);
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "statistic: " << report.statistic << "\n";
  for (const GroupSummary& g : report.groups) {
    out << "  " << g.label << ": n = " << g.n;
    if (g.mean) out << ", mean = " << num(*g.mean);
    out << "\n";
  }
  out << "family: " << report.family;
  if (report.variance_model) out << " (" << *report.variance_model << " variance)";
  out << "\n";
  out << "estimate: " << num(report.center);
  if (report.df) out << "   scale: " << num(report.scale) << "   df: " << num(*report.df);
  else if (report.scale > 0.0) out << "   scale: " << num(report.scale);
  out << "\n";
  if (report.two_tailed_p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f (%.1f%%)", *report.two_tailed_p,
                  100.0 * *report.two_tailed_p);
    out << "two-tailed p (null 0): " << buf << "\n";
  }
  if (report.ci_95)
    out << "95% confidence interval: " << num(report.ci_95->first) << " to "
        << num(report.ci_95->second) << "\n";
  if (!report.rows.empty()) {
    out << "hypotheses:\n";
    std::size_t width = 10;
    std::size_t pct_width = 6;
    for (const HypothesisRow& row : report.rows) {
      width = std::max(width, row.label.size());
      pct_width = std::max(pct_width, qualified_percent(row.tp).size());
    }
    for (const HypothesisRow& row : report.rows) {
      const std::string pct = qualified_percent(row.tp);
      out << "  " << row.label << std::string(width + 2 - row.label.size(), ' ')
          << std::string(pct_width - pct.size(), ' ') << pct << "  ["
          << method_name(row.tp.method) << "]";
      if (row.bayes_value) out << "  bayes-mc: " << format_percent(*row.bayes_value);
      out << "\n";
    }
  }
  if (report.bayes_seed)
    out << "bayes check: " << *report.bayes_draws << " draws, seed " << *report.bayes_seed
        << "\n";
  if (report.method_note) out << "note: " << *report.method_note << "\n";
  return out.str();
}

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["statistic"] = report.statistic;
  j["groups"] = nlohmann::json::array();
  for (const GroupSummary& g : report.groups) {
    nlohmann::json jg = {{"label", g.label}, {"n", g.n}};
    if (g.mean) jg["mean"] = *g.mean;
    j["groups"].push_back(std::move(jg));
  }
  j["family"] = report.family;
  j["center"] = report.center;
  j["scale"] = report.scale;
  if (report.df) j["df"] = *report.df;
  if (report.variance_model) j["variance_model"] = *report.variance_model;
  if (report.two_tailed_p) j["two_tailed_p"] = *report.two_tailed_p;
  if (report.ci_95) j["ci_95"] = {report.ci_95->first, report.ci_95->second};
  j["hypotheses"] = nlohmann::json::array();
  for (const HypothesisRow& row : report.rows) {
    nlohmann::json r = {{"label", row.label},
                        {"region", row.region_text},
                        {"tentative_probability", row.tp.value},
                        {"method", method_name(row.tp.method)},
                        {"qualifier", qualifier_name(row.tp.qualifier)}};
    if (row.bayes_value) r["bayes_probability"] = *row.bayes_value;
    j["hypotheses"].push_back(std::move(r));
  }
  if (report.bayes_seed) {
    j["bayes_check"] = {{"seed", *report.bayes_seed}, {"draws", *report.bayes_draws}};
  }
  if (report.method_note) j["note"] = *report.method_note;
  return j;
}

}  // namespace cdist
