#include "mstinfer/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mstinfer/experiment.hpp"
#include "mstinfer/rng.hpp"

using namespace mstinfer;

namespace {

double reparse(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(ec == std::errc());
  REQUIRE(p == s.data() + s.size());
  return v;
}

ReplicationResult make_result(int i) {
  ReplicationResult r;
  r.replication = i;
  r.ppv = 0.5 + 0.01 * i;
  r.bppv_mean = 0.25;
  r.auc = 0.75;
  r.sample_nodes = 10;
  r.sample_edges = 45;
  r.sample_mst_edges = 9;
  r.pop_nodes = 100;
  r.pop_edges = 4950;
  r.pop_mst_edges = 99;
  r.pop_components = 1;
  r.sample_components = 1;
  return r;
}

}  // namespace

TEST_CASE("format_double renders shortest round-tripping decimals") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.125) == "0.125");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");

  Rng rng(2024);
  for (int t = 0; t < 2000; ++t) {
    double scale = std::pow(10.0, static_cast<double>(rng.next_below(21)) - 10.0);
    double v = (rng.uniform01() * 2.0 - 1.0) * scale;
    CHECK(reparse(format_double(v)) == v);
  }
}

TEST_CASE("replication rows survive a write-read round trip") {
  std::vector<ReplicationResult> results;
  results.push_back(make_result(0));
  ReplicationResult gaps = make_result(1);
  gaps.ppv = std::nullopt;
  gaps.auc = std::nullopt;
  results.push_back(gaps);

  std::ostringstream out;
  write_replication_csv(out, results);
  std::string text = out.str();
  CHECK(text ==
        "replication,ppv,bppv_mean,auc,sample_nodes,sample_edges,"
        "sample_mst_edges,pop_nodes,pop_edges,pop_mst_edges,pop_components,"
        "sample_components\n"
        "0,0.5,0.25,0.75,10,45,9,100,4950,99,1,1\n"
        "1,,0.25,,10,45,9,100,4950,99,1,1\n");

  std::istringstream in(text);
  CHECK(read_replication_csv(in) == results);

  // CRLF input parses identically.
  std::string crlf = text;
  std::string with_cr;
  for (char c : crlf) {
    if (c == '\n') with_cr += '\r';
    with_cr += c;
  }
  std::istringstream in_cr(with_cr);
  CHECK(read_replication_csv(in_cr) == results);
}

TEST_CASE("replication reader rejects malformed input") {
  std::istringstream no_header("0,0.5,0.25,0.75,10,45,9,100,4950,99,1,1\n");
  CHECK_THROWS_AS(read_replication_csv(no_header), std::runtime_error);

  std::istringstream short_row(
      "replication,ppv,bppv_mean,auc,sample_nodes,sample_edges,"
      "sample_mst_edges,pop_nodes,pop_edges,pop_mst_edges,pop_components,"
      "sample_components\n"
      "0,0.5\n");
  CHECK_THROWS_AS(read_replication_csv(short_row), std::runtime_error);

  std::istringstream bad_number(
      "replication,ppv,bppv_mean,auc,sample_nodes,sample_edges,"
      "sample_mst_edges,pop_nodes,pop_edges,pop_mst_edges,pop_components,"
      "sample_components\n"
      "0,zap,0.25,0.75,10,45,9,100,4950,99,1,1\n");
  CHECK_THROWS_AS(read_replication_csv(bad_number), std::runtime_error);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_replication_csv(empty), std::runtime_error);
}

TEST_CASE("experiment output round-trips through csv exactly") {
  ExperimentConfig cfg;
  GeneratorConfig gen;
  gen.kind = GraphKind::Complete;
  gen.node_count = 16;
  cfg.source = gen;
  cfg.design.kind = SamplingKind::Uniform;
  cfg.design.n = 7;
  cfg.replications = 6;
  cfg.bootstraps = 4;
  cfg.master_seed = 99;
  std::vector<ReplicationResult> results = run_experiment(cfg, 1);

  std::ostringstream out;
  write_replication_csv(out, results);
  std::istringstream in(out.str());
  CHECK(read_replication_csv(in) == results);
}

TEST_CASE("summary rows list each defined statistic") {
  std::vector<ReplicationResult> results;
  for (int i = 0; i < 4; ++i) {
    ReplicationResult r;
    r.replication = i;
    r.ppv = 0.25 * i;
    r.bppv_mean = (i < 1) ? std::optional<double>(0.5)
                          : std::optional<double>();
    r.auc = std::nullopt;
    results.push_back(r);
  }
  // bppv_mean has one defined value, auc none: only ppv is summarized.
  auto rows = summarize_results("complete", "uniform", 25, results);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].graph == "complete");
  CHECK(rows[0].sampling == "uniform");
  CHECK(rows[0].n == 25);
  CHECK(rows[0].statistic == "ppv");
  SummaryStats direct = summarize(results, Statistic::Ppv);
  CHECK(rows[0].stats.mean == direct.mean);
  CHECK(rows[0].stats.ci_low == direct.ci_low);
  CHECK(rows[0].stats.n_defined == 4);

  std::ostringstream out;
  write_summary_csv(out, rows);
  std::string text = out.str();
  CHECK(text.rfind("graph,sampling,n,statistic,mean,ci_low,ci_high,n_defined\n",
                   0) == 0);
  CHECK(text.find("complete,uniform,25,ppv,0.375,") != std::string::npos);
}

TEST_CASE("mean_ci computes the normal-approximation interval") {
  std::vector<double> xs{1.0, 2.0, 3.0};
  SummaryStats s = mean_ci(xs);
  CHECK(s.mean == doctest::Approx(2.0));
  CHECK(s.n_defined == 3);
  // sample sd 1 over 3 values: half-width 1.959964 / sqrt(3).
  CHECK(s.ci_high - s.mean == doctest::Approx(1.1315866).epsilon(1e-5));
  CHECK(s.mean - s.ci_low == doctest::Approx(1.1315866).epsilon(1e-5));

  std::vector<double> one{1.0};
  CHECK_THROWS_AS(mean_ci(one), std::invalid_argument);
}
