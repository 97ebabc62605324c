#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mstinfer/experiment.hpp"

namespace mstinfer {

// Shortest decimal string that round-trips to the same double. Locale-free,
// so output files are byte-stable across machines.
std::string format_double(double v);

// One row per replication; undefined statistics become empty fields.
// Header: replication,ppv,bppv_mean,auc,sample_nodes,sample_edges,
// sample_mst_edges,pop_nodes,pop_edges,pop_mst_edges,pop_components,
// sample_components
void write_replication_csv(std::ostream& out,
                           std::span<const ReplicationResult> results);

// Inverse of write_replication_csv (used by the report command).
std::vector<ReplicationResult> read_replication_csv(std::istream& in);

struct SummaryRow {
  std::string graph;
  std::string sampling;
  int n = 0;
  std::string statistic;
  SummaryStats stats;
};

// Header: graph,sampling,n,statistic,mean,ci_low,ci_high,n_defined
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

// Summary rows for every statistic with at least 2 defined values, labeled
// with the given graph/sampling tokens.
std::vector<SummaryRow> summarize_results(
    const std::string& graph, const std::string& sampling, int n,
    std::span<const ReplicationResult> results);

// Mean with normal-approximation 95% CI over raw values (needs >= 2).
SummaryStats mean_ci(std::span<const double> values);

}  // namespace mstinfer
