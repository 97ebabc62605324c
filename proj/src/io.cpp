#include "mstinfer/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mstinfer {

namespace {

constexpr double kZ975 = 1.959964;

const char* kReplicationHeader =
    "replication,ppv,bppv_mean,auc,sample_nodes,sample_edges,"
    "sample_mst_edges,pop_nodes,pop_edges,pop_mst_edges,pop_components,"
    "sample_components";

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("csv: bad numeric field '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("csv: bad integer field '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

void write_replication_csv(std::ostream& out,
                           std::span<const ReplicationResult> results) {
  out << kReplicationHeader << '\n';
  for (const ReplicationResult& r : results) {
    out << r.replication << ',' << opt_field(r.ppv) << ','
        << opt_field(r.bppv_mean) << ',' << opt_field(r.auc) << ','
        << r.sample_nodes << ',' << r.sample_edges << ','
        << r.sample_mst_edges << ',' << r.pop_nodes << ',' << r.pop_edges
        << ',' << r.pop_mst_edges << ',' << r.pop_components << ','
        << r.sample_components << '\n';
  }
}

std::vector<ReplicationResult> read_replication_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != split_csv(kReplicationHeader))
    throw std::runtime_error("csv: missing or unexpected replication header");
  std::vector<ReplicationResult> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 12)
      throw std::runtime_error("csv: expected 12 fields per replication row");
    ReplicationResult r;
    r.replication = parse_int(f[0]);
    r.ppv = parse_opt(f[1]);
    r.bppv_mean = parse_opt(f[2]);
    r.auc = parse_opt(f[3]);
    r.sample_nodes = parse_int(f[4]);
    r.sample_edges = parse_int(f[5]);
    r.sample_mst_edges = parse_int(f[6]);
    r.pop_nodes = parse_int(f[7]);
    r.pop_edges = parse_int(f[8]);
    r.pop_mst_edges = parse_int(f[9]);
    r.pop_components = parse_int(f[10]);
    r.sample_components = parse_int(f[11]);
    out.push_back(r);
  }
  return out;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "graph,sampling,n,statistic,mean,ci_low,ci_high,n_defined\n";
  for (const SummaryRow& r : rows) {
    out << r.graph << ',' << r.sampling << ',' << r.n << ',' << r.statistic
        << ',' << format_double(r.stats.mean) << ','
        << format_double(r.stats.ci_low) << ','
        << format_double(r.stats.ci_high) << ',' << r.stats.n_defined << '\n';
  }
}

std::vector<SummaryRow> summarize_results(
    const std::string& graph, const std::string& sampling, int n,
    std::span<const ReplicationResult> results) {
  std::vector<SummaryRow> rows;
  const std::pair<Statistic, const char*> stats[] = {
      {Statistic::Ppv, "ppv"},
      {Statistic::BppvMean, "bppv_mean"},
      {Statistic::Auc, "auc"},
  };
  for (auto [which, label] : stats) {
    int defined = 0;
    for (const ReplicationResult& r : results) {
      const std::optional<double>& v = which == Statistic::Ppv ? r.ppv
                                       : which == Statistic::BppvMean
                                           ? r.bppv_mean
                                           : r.auc;
      if (v) ++defined;
    }
    if (defined < 2) continue;
    rows.push_back({graph, sampling, n, label, summarize(results, which)});
  }
  return rows;
}

SummaryStats mean_ci(std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("mean_ci: fewer than 2 values");
  double mean = 0.0;
  for (double x : values) mean += x;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double x : values) ss += (x - mean) * (x - mean);
  double var = ss / static_cast<double>(values.size() - 1);
  double half = kZ975 * std::sqrt(var / static_cast<double>(values.size()));
  return {mean, mean - half, mean + half, static_cast<int>(values.size())};
}

}  // namespace mstinfer
