#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mstinfer/generators.hpp"
#include "mstinfer/graph.hpp"
#include "mstinfer/mst.hpp"
#include "mstinfer/ordering.hpp"
#include "mstinfer/sampling.hpp"

namespace mstinfer {

// Outcome of one replication. Statistics are nullopt when undefined: ppv
// needs a non-empty sample forest, bppv_mean needs at least one non-empty
// bootstrap forest, auc needs both outcome classes present.
struct ReplicationResult {
  int replication = 0;
  std::optional<double> ppv;
  std::optional<double> bppv_mean;
  std::optional<double> auc;
  int pop_nodes = 0;
  int pop_edges = 0;
  int pop_mst_edges = 0;
  int pop_components = 0;
  int sample_nodes = 0;
  int sample_edges = 0;
  int sample_mst_edges = 0;
  int sample_components = 0;

  bool operator==(const ReplicationResult&) const = default;
};

struct SummaryStats {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int n_defined = 0;
};

// Population graph fixed across replications, analyzed under one tie-breaking
// ordering throughout.
struct FixedGraphSource {
  std::shared_ptr<const WeightedGraph> graph;
  std::shared_ptr<const EdgeOrdering> ordering;
};

struct ExperimentConfig {
  std::variant<GeneratorConfig, FixedGraphSource> source;
  SampleDesign design;  // design.seed is ignored; per-replication seeds are derived
  int replications = 1000;
  int bootstraps = 100;
  std::uint64_t master_seed = 0;
  // Bootstrap rounds mirror the primary sampling kind unless this asks for
  // uniform resampling regardless of design.
  bool uniform_bootstrap = false;
  // Assert per replication that no population-forest edge present among the
  // sampled edges is missing from the sample forest (throws std::logic_error
  // on violation; the check is exact, not statistical).
  bool check_npv = true;
};

// |t_pop ∩ t_sample| / |t_sample|; nullopt for an empty sample forest.
// Both forests must refer to the same edge id space.
std::optional<double> ppv(const Forest& t_pop, const Forest& t_sample);

// round(n^2 / N) to nearest, halves away from zero.
int bootstrap_sample_size(int n, int N);

// One bootstrap round on the sample graph h: draw round(n^2/N) of its nodes
// with the given strategy, return the minimum spanning forest of the induced
// subgraph as edge ids of h. h_ordering supplies the tie-breaking ranks.
Forest bootstrap_round(const WeightedGraph& h, const EdgeOrdering& h_ordering,
                       int n, int N, SamplingKind kind, std::uint64_t seed,
                       WalkScore walk_score = WalkScore::Strength);

// Mann-Whitney AUC: probability that a uniformly chosen positive outranks a
// uniformly chosen negative, ties counting half. nullopt when either class is
// empty.
std::optional<double> auc(std::span<const int> scores,
                          std::span<const char> labels);

// Executes one full replication: population -> ordering -> sample -> forests
// -> statistics. Deterministic given (cfg, i); every seed in the replication
// derives from (cfg.master_seed, i, stage tag).
ReplicationResult run_replication(const ExperimentConfig& cfg, int i);

// Runs all replications on `workers` threads. Results are keyed by
// replication index, so the output is identical for any worker count.
// `progress`, if set, is called as (completed, total) after each replication.
std::vector<ReplicationResult> run_experiment(
    const ExperimentConfig& cfg, int workers,
    const std::function<void(int, int)>& progress = {});

enum class Statistic { Ppv, BppvMean, Auc };

// Mean and normal-approximation 95% CI over the replications where the
// statistic is defined. Fewer than 2 defined values is an error.
SummaryStats summarize(std::span<const ReplicationResult> results,
                       Statistic which);

struct GnpPpvEstimate {
  double simulated = 0.0;  // pooled share of sample-forest edges that are population-forest edges
  double formula = 0.0;    // closed form with component counts replaced by trial means
};

// Monte-Carlo check that the sparse-graph PPV formula matches simulation:
// `trials` independent (graph, ordering, uniform sample) draws at the given
// N, n, p.
GnpPpvEstimate estimate_gnp_ppv_formula(int N, int n, double p, int trials,
                                        std::uint64_t seed);

}  // namespace mstinfer
