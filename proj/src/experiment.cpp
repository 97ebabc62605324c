#include "mstinfer/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mstinfer/rng.hpp"

namespace mstinfer {

namespace {

constexpr double kZ975 = 1.959964;

// Stage tags for per-replication seed derivation.
constexpr std::uint64_t kSeedGraph = 0;
constexpr std::uint64_t kSeedOrdering = 1;
constexpr std::uint64_t kSeedSample = 2;
constexpr std::uint64_t kSeedBootstrapBase = 3;  // + bootstrap index

std::size_t intersection_size(const std::vector<EdgeId>& a,
                              const std::vector<EdgeId>& b) {
  std::size_t count = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

Forest map_to_parent(const Forest& child,
                     std::span<const EdgeId> edge_to_parent) {
  Forest out;
  out.edges.reserve(child.edges.size());
  for (EdgeId e : child.edges)
    out.edges.push_back(edge_to_parent[static_cast<std::size_t>(e)]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

std::optional<double> ppv(const Forest& t_pop, const Forest& t_sample) {
  if (t_sample.edges.empty()) return std::nullopt;
  return static_cast<double>(intersection_size(t_pop.edges, t_sample.edges)) /
         static_cast<double>(t_sample.edges.size());
}

int bootstrap_sample_size(int n, int N) {
  if (n < 0 || N <= 0)
    throw std::invalid_argument("bootstrap_sample_size: bad n or N");
  double exact = static_cast<double>(n) * n / N;
  return static_cast<int>(std::llround(exact));  // rounds halves away from zero
}

Forest bootstrap_round(const WeightedGraph& h, const EdgeOrdering& h_ordering,
                       int n, int N, SamplingKind kind, std::uint64_t seed,
                       WalkScore walk_score) {
  if (kind == SamplingKind::Quadrant)
    throw std::invalid_argument("bootstrap_round: quadrant designs do not bootstrap");
  int boot_n = bootstrap_sample_size(n, N);
  if (boot_n > h.node_count())
    throw std::invalid_argument("bootstrap_round: size exceeds sample graph");
  SampleDesign d;
  d.kind = kind;
  d.n = boot_n;
  d.walk_score = walk_score;
  d.seed = seed;
  NodeSubset picked = sample(h, d);
  InducedSubgraph sub = induced_subgraph(h, picked);
  EdgeOrdering sub_ord = restrict_ordering(h_ordering, sub.edge_to_parent);
  return map_to_parent(msf(sub.graph, sub_ord), sub.edge_to_parent);
}

std::optional<double> auc(std::span<const int> scores,
                          std::span<const char> labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("auc: scores and labels differ in length");
  std::vector<int> neg;
  std::vector<int> pos;
  for (std::size_t i = 0; i < scores.size(); ++i)
    (labels[i] ? pos : neg).push_back(scores[i]);
  if (pos.empty() || neg.empty()) return std::nullopt;

  std::sort(neg.begin(), neg.end());
  std::uint64_t wins = 0, ties = 0;
  for (int s : pos) {
    auto lo = std::lower_bound(neg.begin(), neg.end(), s);
    auto hi = std::upper_bound(lo, neg.end(), s);
    wins += static_cast<std::uint64_t>(lo - neg.begin());
    ties += static_cast<std::uint64_t>(hi - lo);
  }
  return (static_cast<double>(wins) + 0.5 * static_cast<double>(ties)) /
         (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

ReplicationResult run_replication(const ExperimentConfig& cfg, int i) {
  if (cfg.replications < 1 || cfg.bootstraps < 0)
    throw std::invalid_argument("experiment: need R >= 1 and B >= 0");
  const std::uint64_t master = cfg.master_seed;
  const std::uint64_t idx = static_cast<std::uint64_t>(i);

  // Population graph and its tie-breaking ordering. A fixed source reuses
  // one graph and one ordering for every replication.
  WeightedGraph generated;
  const WeightedGraph* g = nullptr;
  EdgeOrdering generated_ord;
  const EdgeOrdering* ord = nullptr;
  if (const auto* gen = std::get_if<GeneratorConfig>(&cfg.source)) {
    GeneratorConfig gc = *gen;
    gc.seed = derive_seed(master, idx, kSeedGraph);
    generated = generate(gc);
    g = &generated;
    generated_ord = weight_ordering(*g, derive_seed(master, idx, kSeedOrdering));
    ord = &generated_ord;
  } else {
    const auto& fixed = std::get<FixedGraphSource>(cfg.source);
    if (!fixed.graph || !fixed.ordering)
      throw std::invalid_argument("experiment: fixed source missing graph or ordering");
    g = fixed.graph.get();
    ord = fixed.ordering.get();
  }

  Forest t_pop = msf(*g, *ord);

  SampleDesign design = cfg.design;
  design.seed = derive_seed(master, idx, kSeedSample);
  NodeSubset subset = sample(*g, design);
  InducedSubgraph sub = induced_subgraph(*g, subset);
  EdgeOrdering sub_ord = restrict_ordering(*ord, sub.edge_to_parent);
  Forest t_n_child = msf(sub.graph, sub_ord);
  Forest t_n = map_to_parent(t_n_child, sub.edge_to_parent);

  if (cfg.check_npv && !verify_npv(t_pop, sub.edge_to_parent, t_n))
    throw std::logic_error("replication: sample forest misses a population forest edge");

  ReplicationResult r;
  r.replication = i;
  r.ppv = ppv(t_pop, t_n);
  r.pop_nodes = g->node_count();
  r.pop_edges = g->edge_count();
  r.pop_mst_edges = static_cast<int>(t_pop.edges.size());
  r.pop_components = component_count(*g);
  r.sample_nodes = sub.graph.node_count();
  r.sample_edges = sub.graph.edge_count();
  r.sample_mst_edges = static_cast<int>(t_n.edges.size());
  r.sample_components = component_count(sub.graph);

  if (cfg.bootstraps > 0 && cfg.design.kind != SamplingKind::Quadrant) {
    SamplingKind boot_kind =
        cfg.uniform_bootstrap ? SamplingKind::Uniform : cfg.design.kind;
    std::vector<int> boot_count(static_cast<std::size_t>(sub.graph.edge_count()), 0);
    double bppv_sum = 0.0;
    int bppv_defined = 0;
    for (int j = 0; j < cfg.bootstraps; ++j) {
      Forest t_boot = bootstrap_round(
          sub.graph, sub_ord, design.n, g->node_count(), boot_kind,
          derive_seed(master, idx, kSeedBootstrapBase + static_cast<std::uint64_t>(j)),
          cfg.design.walk_score);
      for (EdgeId e : t_boot.edges) ++boot_count[static_cast<std::size_t>(e)];
      if (auto b = ppv(t_n_child, t_boot)) {
        bppv_sum += *b;
        ++bppv_defined;
      }
    }
    if (bppv_defined > 0) r.bppv_mean = bppv_sum / bppv_defined;

    std::vector<char> in_pop(static_cast<std::size_t>(sub.graph.edge_count()), 0);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e)
      in_pop[static_cast<std::size_t>(e)] = std::binary_search(
          t_pop.edges.begin(), t_pop.edges.end(),
          sub.edge_to_parent[static_cast<std::size_t>(e)]);
    r.auc = auc(boot_count, in_pop);
  }
  return r;
}

std::vector<ReplicationResult> run_experiment(
    const ExperimentConfig& cfg, int workers,
    const std::function<void(int, int)>& progress) {
  const int total = cfg.replications;
  std::vector<ReplicationResult> results(static_cast<std::size_t>(total));
  workers = std::clamp(workers, 1, std::max(1, total));

  if (workers == 1) {
    for (int i = 0; i < total; ++i) {
      results[static_cast<std::size_t>(i)] = run_replication(cfg, i);
      if (progress) progress(i + 1, total);
    }
    return results;
  }

  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= total) return;
      try {
        results[static_cast<std::size_t>(i)] = run_replication(cfg, i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      int completed = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(mu);
        progress(completed, total);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

SummaryStats summarize(std::span<const ReplicationResult> results,
                       Statistic which) {
  std::vector<double> xs;
  for (const ReplicationResult& r : results) {
    const std::optional<double>& v = which == Statistic::Ppv ? r.ppv
                                     : which == Statistic::BppvMean ? r.bppv_mean
                                                                    : r.auc;
    if (v) xs.push_back(*v);
  }
  if (xs.size() < 2)
    throw std::invalid_argument("summarize: fewer than 2 defined values");
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  double var = ss / static_cast<double>(xs.size() - 1);
  double half = kZ975 * std::sqrt(var / static_cast<double>(xs.size()));
  return {mean, mean - half, mean + half, static_cast<int>(xs.size())};
}

GnpPpvEstimate estimate_gnp_ppv_formula(int N, int n, double p, int trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("estimate: need trials >= 1");
  std::uint64_t hit = 0, sample_mst_edges = 0;
  double pop_comp_sum = 0.0, sample_comp_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ti = static_cast<std::uint64_t>(t);
    WeightedGraph g = gen_gnp(N, p, derive_seed(seed, ti, kSeedGraph));
    EdgeOrdering ord = weight_ordering(g, derive_seed(seed, ti, kSeedOrdering));
    Forest t_pop = msf(g, ord);

    SampleDesign d;
    d.kind = SamplingKind::Uniform;
    d.n = n;
    d.seed = derive_seed(seed, ti, kSeedSample);
    InducedSubgraph sub = induced_subgraph(g, sample(g, d));
    Forest t_n = map_to_parent(msf(sub.graph, restrict_ordering(ord, sub.edge_to_parent)),
                               sub.edge_to_parent);

    hit += intersection_size(t_pop.edges, t_n.edges);
    sample_mst_edges += t_n.edges.size();
    pop_comp_sum += component_count(g);
    sample_comp_sum += component_count(sub.graph);
  }
  GnpPpvEstimate est;
  est.simulated = sample_mst_edges == 0
                      ? 0.0
                      : static_cast<double>(hit) / static_cast<double>(sample_mst_edges);
  double mean_pop_comp = pop_comp_sum / trials;
  double mean_sample_comp = sample_comp_sum / trials;
  est.formula = (static_cast<double>(n) / N) *
                (static_cast<double>(n - 1) / (N - 1)) *
                ((N - mean_pop_comp) / (n - mean_sample_comp));
  return est;
}

}  // namespace mstinfer
