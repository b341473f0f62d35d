// Command-line front end: CSV ingestion, analysis configuration, report
// tables, density emission and machine-readable JSON output.
//
// Exit codes: 0 analysis completed, 2 input problem (missing file, malformed
// CSV, bad hypothesis or flag usage), 3 statistical degeneracy.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cdist/specfun.hpp"

#include "cdist/bayes.hpp"
#include "cdist/csv.hpp"
#include "cdist/estimators.hpp"
#include "cdist/hypotheses.hpp"
#include "cdist/report.hpp"
#include "cdist/validate.hpp"

namespace {

using namespace cdist;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Usage problems that surface after flag parsing (bad hypothesis for the
// chosen method, bad range syntax, ...). Mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SharedOptions {
  std::vector<std::string> hypothesis_texts;
  std::string method = "cdf";
  std::string json_target;     // file path, or "-" for stdout
  std::string density_target;  // file path
  int density_points = 512;
  std::string density_range;   // "lo..hi"
};

void add_shared_options(CLI::App* cmd, SharedOptions& opts) {
  cmd->add_option("--hypothesis", opts.hypothesis_texts,
                  "Hypothesis about the parameter, e.g. \"> 0\" or \"between -1 and 1\" "
                  "(repeatable)");
  cmd->add_option("--method", opts.method, "Estimation method for the hypothesis table")
      ->check(CLI::IsMember({"cdf", "inversion", "pvalue"}));
  cmd->add_option("--json", opts.json_target,
                  "Write the full-precision JSON report to FILE (\"-\" for stdout)");
  cmd->add_option("--density", opts.density_target,
                  "Write the density curve as CSV (theta,density rows plus markers) to FILE");
  cmd->add_option("--points", opts.density_points, "Number of density points")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--range", opts.density_range,
                  "Density range as lo..hi (default: center +/- 4.5 scales)");
}

std::vector<HypothesisRegion> resolve_hypotheses(const SharedOptions& opts,
                                                 bool means_defaults) {
  std::vector<std::string> texts = opts.hypothesis_texts;
  if (texts.empty()) {
    if (means_defaults)
      texts = {"> 0", "< 0", "> 1", "between -1 and 1", "< -1"};
    else
      texts = {"> 0", "< 0"};
  }
  std::vector<HypothesisRegion> regions;
  regions.reserve(texts.size());
  for (const std::string& t : texts) regions.push_back(parse_hypothesis(t));
  return regions;
}

// Method 2 mass of a whole region, assembled from per-threshold inversions:
// mass[a, b) = above(a) - above(b).
double inversion_region_mass(const ConfidenceDistribution& cd, const HypothesisRegion& region,
                             bool& routed) {
  auto above = [&](double threshold) {
    const InversionResult r = tp_interval_inversion(cd, threshold);
    routed = routed || r.routed_to_cdf;
    return r.tp_above.value;
  };
  double mass = 0.0;
  for (const Interval& iv : region.intervals) {
    const double hi = std::isinf(iv.upper) ? 0.0 : above(iv.upper);
    const double lo = std::isinf(iv.lower) ? 1.0 : above(iv.lower);
    mass += lo - hi;
  }
  return std::clamp(mass, 0.0, 1.0);
}

std::vector<HypothesisRow> build_rows(const ConfidenceDistribution& cd,
                                      const std::vector<HypothesisRegion>& regions,
                                      const std::string& method,
                                      std::optional<std::string>& note) {
  std::vector<HypothesisRow> rows;
  rows.reserve(regions.size());
  if (method == "pvalue") {
    const double p = two_tailed_p(cd, 0.0);
    const EstimateSign sign =
        cd.median() >= 0.0 ? EstimateSign::Positive : EstimateSign::Negative;
    const SignSplit split = tp_from_p({p, PValueRelation::Equals, sign});
    for (const HypothesisRegion& region : regions) {
      const bool positive_ray = region.intervals.size() == 1 &&
                                region.intervals[0].lower == 0.0 &&
                                std::isinf(region.intervals[0].upper);
      const bool negative_ray = region.intervals.size() == 1 &&
                                region.intervals[0].upper == 0.0 &&
                                std::isinf(region.intervals[0].lower);
      if (!positive_ray && !negative_ray)
        throw UsageError("--method pvalue supports only the hypotheses \"> 0\" and \"< 0\"; "
                         "use --method cdf or inversion for \"" +
                         region.label + "\"");
      rows.push_back({region.label, region.label,
                      positive_ray ? split.positive : split.negative, std::nullopt});
    }
    return rows;
  }
  if (method == "inversion") {
    bool routed = false;
    for (const HypothesisRegion& region : regions) {
      bool routed_here = false;
      const double mass = inversion_region_mass(cd, region, routed_here);
      routed = routed || routed_here;
      rows.push_back({region.label, region.label,
                      {mass,
                       routed_here ? Method::CdfDirect : Method::IntervalInversion,
                       BoundQualifier::Exact},
                      std::nullopt});
    }
    if (routed) {
      note = "interval inversion assumes equal-tail symmetry; asymmetric family "
             "routed to the direct confidence-distribution method";
      std::cerr << "note: " << *note << "\n";
    }
    return rows;
  }
  for (const HypothesisRegion& region : regions)
    rows.push_back({region.label, region.label, tp_cdf_direct(cd, region), std::nullopt});
  return rows;
}

void emit_density(const ConfidenceDistribution& cd, const SharedOptions& opts,
                  const std::vector<HypothesisRegion>& regions) {
  if (cd.is_point_mass())
    throw std::domain_error("density: unsupported for a point-mass distribution");
  double lo, hi;
  if (opts.density_range.empty()) {
    if (cd.family() == Family::TransformedNormal) {
      lo = cd.transform()->inverse(cd.center() - 4.5 * cd.scale());
      hi = cd.transform()->inverse(cd.center() + 4.5 * cd.scale());
    } else {
      lo = cd.center() - 4.5 * cd.scale();
      hi = cd.center() + 4.5 * cd.scale();
    }
  } else {
    const auto sep = opts.density_range.find("..");
    if (sep == std::string::npos)
      throw UsageError("--range expects lo..hi, got \"" + opts.density_range + "\"");
    try {
      lo = std::stod(opts.density_range.substr(0, sep));
      hi = std::stod(opts.density_range.substr(sep + 2));
    } catch (const std::exception&) {
      throw UsageError("--range expects numeric lo..hi, got \"" + opts.density_range + "\"");
    }
  }
  if (!(lo < hi)) throw UsageError("--range: lo must be below hi");
  if (opts.density_points < 2) throw UsageError("--points must be at least 2");

  std::ofstream out(opts.density_target);
  if (!out) throw CsvError("cannot write density file: " + opts.density_target);
  out << "theta,density\n";
  char buf[80];
  const int n = opts.density_points;
  for (int i = 0; i < n; ++i) {
    const double theta = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", theta, cd.density(theta));
    out << buf;
  }
  // Marker section: the zero line plus every finite hypothesis threshold.
  std::set<double> markers{0.0};
  for (const HypothesisRegion& region : regions)
    for (const Interval& iv : region.intervals) {
      if (std::isfinite(iv.lower)) markers.insert(iv.lower);
      if (std::isfinite(iv.upper)) markers.insert(iv.upper);
    }
  for (double m : markers) {
    std::snprintf(buf, sizeof(buf), "marker,%.12g\n", m);
    out << buf;
  }
}

void deliver(const AnalysisReport& report, const SharedOptions& opts) {
  const bool json_to_stdout = opts.json_target == "-";
  if (!json_to_stdout) std::cout << render_text(report);
  if (opts.json_target.empty()) return;
  const std::string payload = to_json(report).dump(2) + "\n";
  if (json_to_stdout) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.json_target);
    if (!out) throw CsvError("cannot write JSON file: " + opts.json_target);
    out << payload;
  }
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int run_means(const std::string& file_a, const std::string& file_b, bool welch,
              int replicate, bool bayes_check, std::size_t draws, std::uint64_t seed,
              const SharedOptions& opts) {
  Sample a{read_numeric_column(file_a), file_stem(file_a)};
  Sample b{read_numeric_column(file_b), file_stem(file_b)};
  const auto regions = resolve_hypotheses(opts, true);

  if (replicate > 1) {
    a = replicate_sample(a, replicate);
    b = replicate_sample(b, replicate);
  }
  const auto model = welch ? VarianceModel::Welch : VarianceModel::Pooled;
  const ConfidenceDistribution cd = mean_difference_cd(a, b, model);

  AnalysisReport report;
  describe_distribution(report, cd);
  report.groups = {{a.label, a.values.size(), sample_mean(a.values)},
                   {b.label, b.values.size(), sample_mean(b.values)}};
  report.variance_model = welch ? "welch" : "pooled";
  report.two_tailed_p = two_tailed_p(cd, 0.0);
  report.rows = build_rows(cd, regions, opts.method, report.method_note);

  if (bayes_check) {
    const PosteriorDraws posterior = posterior_mean_difference(a, b, draws, seed);
    for (std::size_t i = 0; i < regions.size(); ++i)
      report.rows[i].bayes_value =
          empirical_region_probability(posterior, regions[i]).value;
    report.bayes_seed = seed;
    report.bayes_draws = draws;
  }

  if (!opts.density_target.empty()) emit_density(cd, opts, regions);
  deliver(report, opts);
  return 0;
}

int run_prop(long k1, long n1, long k2, long n2, const SharedOptions& opts) {
  const auto regions = resolve_hypotheses(opts, false);
  const ConfidenceDistribution cd = proportion_difference_cd(k1, n1, k2, n2);
  if (proportion_small_counts(k1, n1, k2, n2))
    std::cerr << "note: a group has fewer than 5 successes or failures; the normal "
                 "approximation is rough\n";

  AnalysisReport report;
  describe_distribution(report, cd);
  report.groups = {{"group 1", static_cast<std::size_t>(n1),
                    static_cast<double>(k1) / static_cast<double>(n1)},
                   {"group 2", static_cast<std::size_t>(n2),
                    static_cast<double>(k2) / static_cast<double>(n2)}};
  report.two_tailed_p = two_tailed_p(cd, 0.0);
  report.rows = build_rows(cd, regions, opts.method, report.method_note);
  if (!opts.density_target.empty()) emit_density(cd, opts, regions);
  deliver(report, opts);
  return 0;
}

int run_pairs(const std::string& file, bool correlation, const SharedOptions& opts) {
  const auto pairs = read_numeric_pairs(file);
  const auto regions = resolve_hypotheses(opts, false);
  const ConfidenceDistribution cd = correlation ? correlation_cd(pairs) : slope_cd(pairs);

  AnalysisReport report;
  describe_distribution(report, cd);
  report.groups = {{file_stem(file), pairs.size(), std::nullopt}};
  report.two_tailed_p = two_tailed_p(cd, 0.0);
  report.rows = build_rows(cd, regions, opts.method, report.method_note);
  if (!opts.density_target.empty()) emit_density(cd, opts, regions);
  deliver(report, opts);
  return 0;
}

int run_from_p(double p, const std::string& sign, bool p_is_bound,
               const std::string& json_target) {
  PValueInput input;
  input.p = p;
  input.relation = p_is_bound ? PValueRelation::LessThan : PValueRelation::Equals;
  input.estimate_sign =
      sign == "negative" ? EstimateSign::Negative : EstimateSign::Positive;
  const SignSplit split = tp_from_p(input);

  auto pct = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s + "%";
  };
  auto line = [&](const char* name, const TentativeProbability& tp) {
    std::string prefix;
    if (tp.qualifier == BoundQualifier::LowerBound) prefix = "> ";
    if (tp.qualifier == BoundQualifier::UpperBound) prefix = "< ";
    return std::string("tentative probability ") + name + ": " + prefix + pct(tp.value);
  };

  const bool json_to_stdout = json_target == "-";
  if (!json_to_stdout) {
    std::cout << line("positive", split.positive) << "\n"
              << line("negative", split.negative) << "\n";
  }
  if (!json_target.empty()) {
    nlohmann::json j = {
        {"p", p},
        {"relation", p_is_bound ? "less-than" : "equals"},
        {"estimate_sign", sign},
        {"positive",
         {{"tentative_probability", split.positive.value},
          {"method", method_name(split.positive.method)},
          {"qualifier", qualifier_name(split.positive.qualifier)}}},
        {"negative",
         {{"tentative_probability", split.negative.value},
          {"method", method_name(split.negative.method)},
          {"qualifier", qualifier_name(split.negative.qualifier)}}}};
    const std::string payload = j.dump(2) + "\n";
    if (json_to_stdout) {
      std::cout << payload;
    } else {
      std::ofstream out(json_target);
      if (!out) throw CsvError("cannot write JSON file: " + json_target);
      out << payload;
    }
  }
  return 0;
}

int run_coverage(double delta, double sd, int n, int reps, std::uint64_t seed) {
  CoverageScenario scenario;
  scenario.true_mean_a = delta;
  scenario.true_mean_b = 0.0;
  scenario.true_sd = sd;
  scenario.n_per_group = n;
  scenario.replications = reps;
  scenario.seed = seed;
  if (reps < 100)
    std::cerr << "note: fewer than 100 replications gives a very wide pass band\n";
  const CoverageResult result = coverage_experiment(scenario);
  const double critical = ks_critical_alpha01(static_cast<std::size_t>(reps));

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "scenario: delta = %g, sd = %g, n = %d per group, replications = %d, "
                "seed = %llu\n",
                delta, sd, n, reps, static_cast<unsigned long long>(seed));
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "ks distance: %.6f (critical %.6f at alpha = 0.01): %s\n",
                result.ks_distance, critical,
                result.ks_distance < critical ? "PASS" : "FAIL");
  std::cout << buf;
  std::snprintf(buf, sizeof(buf), "95%% interval coverage: %.4f\n",
                result.interval_coverage_95);
  std::cout << buf;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"confidence distributions and tentative probabilities for hypotheses"};
  app.require_subcommand(1);

  SharedOptions opts;

  // means
  auto* means = app.add_subcommand(
      "means", "Difference of two group means from two single-column CSV files");
  std::string file_a, file_b;
  bool welch = false;
  int replicate = 1;
  bool bayes_check = false;
  std::size_t draws = 1000000;
  std::uint64_t seed = 1;
  means->add_option("a_csv", file_a, "CSV with one observation per row (group A)")
      ->required();
  means->add_option("b_csv", file_b, "CSV with one observation per row (group B)")
      ->required();
  means->add_flag("--welch", welch, "Welch (unpooled) variance model");
  means->add_option("--replicate", replicate, "Analyze K concatenated copies of each sample")
      ->check(CLI::PositiveNumber);
  means->add_flag("--bayes-check", bayes_check,
                  "Cross-check the table with flat-prior Monte Carlo draws");
  means->add_option("--draws", draws, "Number of posterior draws for --bayes-check");
  means->add_option("--seed", seed, "Seed for --bayes-check draws");
  add_shared_options(means, opts);

  // prop
  auto* prop = app.add_subcommand("prop", "Difference of two proportions from counts");
  long k1 = 0, n1 = 0, k2 = 0, n2 = 0;
  prop->add_option("--k1", k1, "Successes in group 1")->required();
  prop->add_option("--n1", n1, "Trials in group 1")->required();
  prop->add_option("--k2", k2, "Successes in group 2")->required();
  prop->add_option("--n2", n2, "Trials in group 2")->required();
  add_shared_options(prop, opts);

  // corr / slope
  auto* corr = app.add_subcommand(
      "corr", "Pearson correlation from a two-column CSV of x,y pairs");
  std::string pairs_file;
  corr->add_option("pairs_csv", pairs_file, "CSV with x,y per row")->required();
  add_shared_options(corr, opts);

  auto* slope = app.add_subcommand(
      "slope", "Least-squares slope from a two-column CSV of x,y pairs");
  std::string slope_file;
  slope->add_option("pairs_csv", slope_file, "CSV with x,y per row")->required();
  add_shared_options(slope, opts);

  // from-p
  auto* fromp = app.add_subcommand(
      "from-p", "Tentative probabilities straight from a two-tailed p value");
  double p_value = 1.0;
  std::string sign = "positive";
  bool p_is_bound = false;
  std::string fromp_json;
  fromp->add_option("--p", p_value, "Two-tailed p value in (0, 1]")->required();
  fromp->add_option("--sign", sign, "Sign of the sample estimate")
      ->check(CLI::IsMember({"positive", "negative"}))
      ->required();
  fromp->add_flag("--p-is-bound", p_is_bound, "Treat the p value as an upper bound (p < x)");
  fromp->add_option("--json", fromp_json, "Write JSON to FILE (\"-\" for stdout)");

  // coverage
  auto* coverage = app.add_subcommand(
      "coverage", "Repeated-sampling calibration of the pooled-t confidence distribution");
  double delta = 0.0, sd = 1.0;
  int cov_n = 10, reps = 10000;
  std::uint64_t cov_seed = 1;
  coverage->add_option("--delta", delta, "True difference of population means");
  coverage->add_option("--sd", sd, "Common population standard deviation");
  coverage->add_option("--n", cov_n, "Observations per group");
  coverage->add_option("--reps", reps, "Number of replications");
  coverage->add_option("--seed", cov_seed, "Replication seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*means) return run_means(file_a, file_b, welch, replicate, bayes_check, draws,
                                 seed, opts);
    if (*prop) return run_prop(k1, n1, k2, n2, opts);
    if (*corr) return run_pairs(pairs_file, true, opts);
    if (*slope) return run_pairs(slope_file, false, opts);
    if (*fromp) return run_from_p(p_value, sign, p_is_bound, fromp_json);
    if (*coverage) return run_coverage(delta, sd, cov_n, reps, cov_seed);
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
