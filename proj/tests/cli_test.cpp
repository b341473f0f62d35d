#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/subprocess.hpp"

namespace {

const std::string kCli = CDIST_CLI_PATH;

std::string table1_a() { return "8\n5\n6\n6\n6\n5\n8\n7\n7\n5\n"; }
std::string table1_b() { return "score\n8\n7\n5\n6\n3\n8\n6\n6\n3\n8\n"; }

struct Fixture {
  std::string a = subprocess::write_file("pop_a.csv", table1_a()).string();
  std::string b = subprocess::write_file("pop_b.csv", table1_b()).string();
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("means reproduces the small-sample report") {
  Fixture f;
  const auto r = subprocess::run(kCli + " means " + f.a + " " + f.b);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.673"));
  CHECK(contains(r.out, "66%"));
  CHECK(contains(r.out, "34%"));
  CHECK(contains(r.out, "17%"));
  CHECK(contains(r.out, "79%"));
  CHECK(contains(r.out, "4%"));
  CHECK(r.err.empty());
}

TEST_CASE("means with replication reproduces the large-sample report") {
  Fixture f;
  const auto r = subprocess::run(kCli + " means " + f.a + " " + f.b + " --replicate 40");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.004"));
  CHECK(contains(r.out, "99.8%"));
  CHECK(contains(r.out, "0.2%"));
  CHECK(contains(r.out, "100.0%"));
  CHECK(contains(r.out, "0.0%"));
}

TEST_CASE("JSON report carries full precision and the right shape") {
  Fixture f;
  const auto r = subprocess::run(kCli + " means " + f.a + " " + f.b + " --json -");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "t-location-scale");
  CHECK(j["variance_model"] == "pooled");
  CHECK(std::fabs(j["center"].get<double>() - 0.3) < 1e-12);
  CHECK(std::fabs(j["scale"].get<double>() - 0.7) < 1e-12);
  CHECK(j["df"].get<double>() == 18.0);
  CHECK(std::fabs(j["two_tailed_p"].get<double>() - 0.673) < 5e-4);
  CHECK(std::fabs(j["ci_95"][0].get<double>() + 1.1706) < 2e-4);
  CHECK(std::fabs(j["ci_95"][1].get<double>() - 1.7706) < 2e-4);
  REQUIRE(j["hypotheses"].size() == 5);
  CHECK(j["hypotheses"][0]["label"] == "> 0");
  CHECK(j["hypotheses"][0]["method"] == "cdf-direct");
  CHECK(std::fabs(j["hypotheses"][0]["tentative_probability"].get<double>() - 0.6635) <
        5e-4);
  CHECK(j["groups"][0]["n"] == 10);

  const auto r40 =
      subprocess::run(kCli + " means " + f.a + " " + f.b + " --replicate 40 --json -");
  const auto j40 = nlohmann::json::parse(r40.out);
  CHECK(j40["df"].get<double>() == 798.0);
  CHECK(std::round(j40["ci_95"][0].get<double>() * 10.0) / 10.0 == 0.1);
  CHECK(std::round(j40["ci_95"][1].get<double>() * 10.0) / 10.0 == 0.5);
}

TEST_CASE("inversion and cdf methods agree") {
  Fixture f;
  const auto r1 = subprocess::run(kCli + " means " + f.a + " " + f.b + " --json -");
  const auto r2 =
      subprocess::run(kCli + " means " + f.a + " " + f.b + " --method inversion --json -");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  const auto j1 = nlohmann::json::parse(r1.out);
  const auto j2 = nlohmann::json::parse(r2.out);
  for (std::size_t i = 0; i < 5; ++i) {
    const double a = j1["hypotheses"][i]["tentative_probability"].get<double>();
    const double b = j2["hypotheses"][i]["tentative_probability"].get<double>();
    CHECK(std::fabs(a - b) < 1e-8);
  }
  CHECK(j2["hypotheses"][0]["method"] == "interval-inversion");
}

TEST_CASE("pvalue method handles the sign hypotheses and rejects others") {
  Fixture f;
  const auto ok = subprocess::run(kCli + " means " + f.a + " " + f.b +
                                  " --method pvalue --hypothesis '> 0' --hypothesis '< 0'" +
                                  " --json -");
  REQUIRE(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["hypotheses"][0]["method"] == "pvalue-bridge");
  CHECK(std::fabs(j["hypotheses"][0]["tentative_probability"].get<double>() - 0.6635) <
        5e-4);

  const auto bad = subprocess::run(kCli + " means " + f.a + " " + f.b + " --method pvalue");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "pvalue"));
}

TEST_CASE("bad inputs exit with the documented codes") {
  Fixture f;
  const auto missing = subprocess::run(kCli + " means /nonexistent.csv " + f.b);
  CHECK(missing.exit_code == 2);
  CHECK(!missing.err.empty());

  const auto malformed_path =
      subprocess::write_file("bad.csv", "1.0\nnot-a-number\n2.0\n").string();
  const auto malformed = subprocess::run(kCli + " means " + malformed_path + " " + f.b);
  CHECK(malformed.exit_code == 2);
  CHECK(contains(malformed.err, "bad.csv"));

  const auto short_path = subprocess::write_file("short.csv", "1.0\n").string();
  const auto degenerate = subprocess::run(kCli + " means " + short_path + " " + f.b);
  CHECK(degenerate.exit_code == 3);

  const auto bad_hyp =
      subprocess::run(kCli + " means " + f.a + " " + f.b + " --hypothesis 'around 0'");
  CHECK(bad_hyp.exit_code == 2);

  const auto collinear_path =
      subprocess::write_file("collinear.csv", "1,2\n2,4\n3,6\n4,8\n").string();
  const auto collinear = subprocess::run(kCli + " corr " + collinear_path);
  CHECK(collinear.exit_code == 3);
}

TEST_CASE("from-p prints both tentative probabilities") {
  const auto r = subprocess::run(kCli + " from-p --p 0.673 --sign positive");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "positive: 66.35%"));
  CHECK(contains(r.out, "negative: 33.65%"));

  const auto bound =
      subprocess::run(kCli + " from-p --p 0.001 --p-is-bound --sign positive");
  CHECK(contains(bound.out, "positive: > 99.95%"));
  CHECK(contains(bound.out, "negative: < 0.05%"));

  const auto even = subprocess::run(kCli + " from-p --p 1.0 --sign positive");
  CHECK(contains(even.out, "positive: 50%"));
  CHECK(contains(even.out, "negative: 50%"));

  const auto bad = subprocess::run(kCli + " from-p --p 1.5 --sign positive");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("density emission") {
  Fixture f;
  const auto density_path =
      (std::filesystem::temp_directory_path() / "density.csv").string();
  const auto r = subprocess::run(kCli + " means " + f.a + " " + f.b + " --density " +
                                 density_path + " --points 257");
  REQUIRE(r.exit_code == 0);

  std::ifstream in(density_path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,density");
  std::vector<double> thetas, densities, markers;
  while (std::getline(in, line)) {
    if (line.rfind("marker,", 0) == 0) {
      markers.push_back(std::stod(line.substr(7)));
      continue;
    }
    const auto comma = line.find(',');
    thetas.push_back(std::stod(line.substr(0, comma)));
    densities.push_back(std::stod(line.substr(comma + 1)));
  }
  REQUIRE(thetas.size() == 257);

  // trapezoid mass over the default +/- 4.5 scale range
  double mass = 0.0;
  for (std::size_t i = 1; i < thetas.size(); ++i)
    mass += 0.5 * (densities[i] + densities[i - 1]) * (thetas[i] - thetas[i - 1]);
  CHECK(mass > 0.999);

  // peak near the center
  std::size_t arg_max = 0;
  for (std::size_t i = 0; i < densities.size(); ++i)
    if (densities[i] > densities[arg_max]) arg_max = i;
  CHECK(std::fabs(thetas[arg_max] - 0.3) < 0.05);

  // markers: zero line plus the hypothesis thresholds -1 and 1
  REQUIRE(markers.size() == 3);
  CHECK(markers[0] == -1.0);
  CHECK(markers[1] == 0.0);
  CHECK(markers[2] == 1.0);

  std::filesystem::remove(density_path);
}

TEST_CASE("bayes check annotates the report") {
  Fixture f;
  const auto r = subprocess::run(kCli + " means " + f.a + " " + f.b +
                                 " --bayes-check --draws 50000 --seed 5 --json -");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bayes_check"]["seed"] == 5);
  CHECK(j["bayes_check"]["draws"] == 50000);
  for (const auto& row : j["hypotheses"]) {
    const double cdf_value = row["tentative_probability"].get<double>();
    const double bayes_value = row["bayes_probability"].get<double>();
    CHECK(std::fabs(cdf_value - bayes_value) < 0.02);
  }
}

TEST_CASE("coverage subcommand is deterministic and passes at the null") {
  const std::string cmd = kCli + " coverage --delta 0 --sd 1 --n 10 --reps 2000 --seed 42";
  const auto r1 = subprocess::run(cmd);
  const auto r2 = subprocess::run(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.out, "PASS"));
  CHECK(r1.out == r2.out);  // identical report bytes

  const auto small = subprocess::run(kCli + " coverage --reps 100 --seed 3");
  CHECK(small.exit_code == 0);
  const auto tiny = subprocess::run(kCli + " coverage --reps 50 --seed 3");
  CHECK(tiny.exit_code == 0);
  CHECK(contains(tiny.err, "note"));
}

TEST_CASE("prop and slope subcommands") {
  const auto r = subprocess::run(kCli + " prop --k1 30 --n1 100 --k2 20 --n2 100 --json -");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "normal-location-scale");
  CHECK(std::fabs(j["center"].get<double>() - 0.1) < 1e-12);

  const auto small_counts =
      subprocess::run(kCli + " prop --k1 2 --n1 10 --k2 5 --n2 10");
  CHECK(small_counts.exit_code == 0);
  CHECK(contains(small_counts.err, "note"));

  const auto pairs_path = subprocess::write_file(
      "pairs.csv", "x,y\n0,1.2\n1,2.9\n2,5.3\n3,6.1\n4,9.4\n5,10.2\n6,13.1\n").string();
  const auto s = subprocess::run(kCli + " slope " + pairs_path + " --json -");
  REQUIRE(s.exit_code == 0);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["family"] == "t-location-scale");
  CHECK(js["df"].get<double>() == 5.0);

  const auto c = subprocess::run(kCli + " corr " + pairs_path + " --json -");
  REQUIRE(c.exit_code == 0);
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["family"] == "transformed-normal");
  // method 2 on the asymmetric family routes to method 3 with a notice
  const auto routed = subprocess::run(kCli + " corr " + pairs_path + " --method inversion");
  CHECK(routed.exit_code == 0);
  CHECK(contains(routed.err, "note"));
}
