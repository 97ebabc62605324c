#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mstinfer/experiment.hpp"
#include "mstinfer/generators.hpp"
#include "mstinfer/graph.hpp"
#include "mstinfer/ingest.hpp"
#include "mstinfer/io.hpp"
#include "mstinfer/mst.hpp"
#include "mstinfer/ordering.hpp"
#include "mstinfer/rng.hpp"
#include "mstinfer/sampling.hpp"
#include "mstinfer/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mstinfer;

namespace {

// User mistakes (flags, config files, input data) exit with 2; unexpected
// runtime failures exit with 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reclassifies any exception thrown while handling user-supplied input.
template <typename Fn>
auto user_input(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

// Seed tags for the simulate planner; the experiment module tags its own
// per-replication stages independently.
constexpr std::uint64_t kTagUnit = 1;
constexpr std::uint64_t kTagFixedOrdering = 2;

SamplingKind sampling_from_token(const std::string& s) {
  if (s == "uniform") return SamplingKind::Uniform;
  if (s == "near") return SamplingKind::Near;
  if (s == "far") return SamplingKind::Far;
  if (s == "walk" || s == "random_walk") return SamplingKind::RandomWalk;
  if (s == "quadrant") return SamplingKind::Quadrant;
  throw ConfigError("unknown sampling design '" + s + "'");
}

std::string sampling_token(SamplingKind k) {
  switch (k) {
    case SamplingKind::Uniform: return "uniform";
    case SamplingKind::Near: return "near";
    case SamplingKind::Far: return "far";
    case SamplingKind::RandomWalk: return "walk";
    case SamplingKind::Quadrant: return "quadrant";
  }
  return "unknown";
}

WalkScore walk_score_from_token(const std::string& s) {
  if (s == "strength") return WalkScore::Strength;
  if (s == "edge_weight" || s == "edge-weight") return WalkScore::EdgeWeight;
  throw ConfigError("unknown walk score '" + s + "' (strength, edge_weight)");
}

ZeroPolicy zero_policy_from_token(const std::string& s) {
  if (s == "after") return ZeroPolicy::ImputeAfterFilter;
  if (s == "before") return ZeroPolicy::ImputeBeforeFilter;
  throw ConfigError("unknown zero policy '" + s + "' (after, before)");
}

Quadrant quadrant_from_token(const std::string& s) {
  if (s == "I") return Quadrant::I;
  if (s == "II") return Quadrant::II;
  if (s == "III") return Quadrant::III;
  if (s == "IV") return Quadrant::IV;
  throw ConfigError("unknown quadrant '" + s + "' (I, II, III, IV)");
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw ConfigError(where + ": unknown key '" + it.key() + "'");
  }
}

const json& require_key(const json& obj, const char* key,
                        const std::string& where) {
  if (!obj.contains(key))
    throw ConfigError(where + ": missing required key '" + key + "'");
  return obj.at(key);
}

template <typename T>
T as(const json& v, const std::string& where) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": wrong type");
  }
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  return true;
}

// One (experiment, design, size) cell of a simulation run.
struct PlanUnit {
  std::string experiment;
  std::string sampling;  // design token, quadrant units carry their set
  int n = 0;             // 0 for quadrant units (size is data-driven)
  std::string file_name;
  ExperimentConfig cfg;
};

struct Plan {
  std::uint64_t master_seed = 0;
  std::vector<PlanUnit> units;
};

double resolve_threshold(const json& e, const std::string& where,
                         double fallback) {
  bool has_abs = e.contains("threshold");
  bool has_pct = e.contains("threshold_pct");
  if (has_abs && has_pct)
    throw ConfigError(where + ": give threshold or threshold_pct, not both");
  double t = fallback;
  if (has_abs) t = as<double>(e.at("threshold"), where + ".threshold");
  if (has_pct) t = as<double>(e.at("threshold_pct"), where + ".threshold_pct") / 100.0;
  if (!(t > 0.0)) throw ConfigError(where + ": threshold must be positive");
  return t;
}

Plan build_plan(const json& root) {
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  check_keys(root, "config",
             {"master_seed", "replications", "bootstraps", "experiments"});
  Plan plan;
  plan.master_seed = as<std::uint64_t>(
      require_key(root, "master_seed", "config"), "config.master_seed");
  int default_r = root.contains("replications")
                      ? as<int>(root.at("replications"), "config.replications")
                      : 1000;
  int default_b = root.contains("bootstraps")
                      ? as<int>(root.at("bootstraps"), "config.bootstraps")
                      : 100;

  const json& experiments = require_key(root, "experiments", "config");
  if (!experiments.is_array() || experiments.empty())
    throw ConfigError("config.experiments: must be a non-empty array");

  std::set<std::string> names;
  std::set<std::string> file_names;
  std::size_t unit_index = 0;
  for (std::size_t ei = 0; ei < experiments.size(); ++ei) {
    const json& e = experiments[ei];
    std::string where = "experiments[" + std::to_string(ei) + "]";
    if (!e.is_object()) throw ConfigError(where + ": must be an object");
    check_keys(e, where,
               {"name", "generator", "input", "threshold", "threshold_pct",
                "zero_policy", "designs", "sample_sizes", "quadrant_sets",
                "replications", "bootstraps", "uniform_bootstrap",
                "walk_score"});

    std::string name =
        as<std::string>(require_key(e, "name", where), where + ".name");
    if (!valid_name(name))
      throw ConfigError(where + ".name: use letters, digits, '_', '-'");
    if (!names.insert(name).second)
      throw ConfigError(where + ": duplicate experiment name '" + name + "'");

    int reps = e.contains("replications")
                   ? as<int>(e.at("replications"), where + ".replications")
                   : default_r;
    int boots = e.contains("bootstraps")
                    ? as<int>(e.at("bootstraps"), where + ".bootstraps")
                    : default_b;
    if (reps < 1) throw ConfigError(where + ": replications must be >= 1");
    if (boots < 0) throw ConfigError(where + ": bootstraps must be >= 0");
    bool uniform_boot =
        e.contains("uniform_bootstrap") &&
        as<bool>(e.at("uniform_bootstrap"), where + ".uniform_bootstrap");
    WalkScore walk_score =
        e.contains("walk_score")
            ? walk_score_from_token(
                  as<std::string>(e.at("walk_score"), where + ".walk_score"))
            : WalkScore::Strength;

    // Population source: a generator or an ingested edgelist.
    bool has_gen = e.contains("generator");
    bool has_input = e.contains("input");
    if (has_gen == has_input)
      throw ConfigError(where + ": give exactly one of generator or input");
    std::variant<GeneratorConfig, FixedGraphSource> source;
    int population_n = 0;
    bool has_coords = false;
    if (has_gen) {
      const json& g = e.at("generator");
      if (!g.is_object())
        throw ConfigError(where + ".generator: must be an object");
      check_keys(g, where + ".generator", {"kind", "nodes", "p", "m_attach"});
      std::string kind = as<std::string>(
          require_key(g, "kind", where + ".generator"), where + ".kind");
      GeneratorConfig gc;
      if (kind == "complete") gc.kind = GraphKind::Complete;
      else if (kind == "gnp") gc.kind = GraphKind::Gnp;
      else if (kind == "normal") gc.kind = GraphKind::Normal;
      else if (kind == "barabasi_albert") gc.kind = GraphKind::BarabasiAlbert;
      else
        throw ConfigError(where + ".generator.kind: unknown kind '" + kind +
                          "' (complete, gnp, normal, barabasi_albert)");
      gc.node_count = as<int>(require_key(g, "nodes", where + ".generator"),
                              where + ".generator.nodes");
      if (gc.node_count < 2)
        throw ConfigError(where + ".generator.nodes: need at least 2");
      if (g.contains("p")) {
        if (gc.kind != GraphKind::Gnp)
          throw ConfigError(where + ".generator: p applies to gnp only");
        gc.p = as<double>(g.at("p"), where + ".generator.p");
        if (!(gc.p >= 0.0 && gc.p <= 1.0))
          throw ConfigError(where + ".generator.p: must lie in [0, 1]");
      }
      if (g.contains("m_attach")) {
        if (gc.kind != GraphKind::BarabasiAlbert)
          throw ConfigError(where +
                            ".generator: m_attach applies to barabasi_albert");
        gc.m_attach = as<int>(g.at("m_attach"), where + ".generator.m_attach");
        if (gc.m_attach < 1 || gc.m_attach >= gc.node_count)
          throw ConfigError(where + ".generator.m_attach: must lie in [1, nodes)");
      }
      population_n = gc.node_count;
      has_coords = gc.kind == GraphKind::Normal;
      source = gc;
    } else {
      std::string path =
          as<std::string>(e.at("input"), where + ".input");
      if (!fs::exists(path))
        throw ConfigError(where + ".input: no such file '" + path + "'");
      double threshold = resolve_threshold(e, where, 0.015);
      ZeroPolicy policy =
          e.contains("zero_policy")
              ? zero_policy_from_token(as<std::string>(e.at("zero_policy"),
                                                       where + ".zero_policy"))
              : ZeroPolicy::ImputeAfterFilter;
      PreprocessResult pre = user_input([&] {
        return preprocess(load_edgelist(path), threshold, policy);
      });
      auto graph =
          std::make_shared<const WeightedGraph>(std::move(pre.graph));
      auto ordering = std::make_shared<const EdgeOrdering>(fixed_ordering(
          *graph, derive_seed(plan.master_seed, kTagFixedOrdering,
                              static_cast<std::uint64_t>(ei))));
      population_n = graph->node_count();
      source = FixedGraphSource{std::move(graph), std::move(ordering)};
    }
    if ((e.contains("threshold") || e.contains("threshold_pct") ||
         e.contains("zero_policy")) &&
        has_gen)
      throw ConfigError(where + ": threshold/zero_policy apply to input only");

    const json& designs = require_key(e, "designs", where);
    if (!designs.is_array() || designs.empty())
      throw ConfigError(where + ".designs: must be a non-empty array");
    bool any_quadrant = false;
    std::set<std::string> seen_designs;
    for (const json& dj : designs) {
      std::string token = as<std::string>(dj, where + ".designs");
      SamplingKind kind = sampling_from_token(token);
      if (!seen_designs.insert(sampling_token(kind)).second)
        throw ConfigError(where + ".designs: duplicate design '" + token + "'");
      if (kind == SamplingKind::Quadrant) any_quadrant = true;
    }
    if (e.contains("quadrant_sets") && !any_quadrant)
      throw ConfigError(where + ": quadrant_sets given without a quadrant design");

    auto add_unit = [&](SamplingKind kind, int n,
                        std::vector<Quadrant> quadrants,
                        const std::string& label) {
      PlanUnit unit;
      unit.experiment = name;
      unit.sampling = label;
      unit.n = n;
      unit.file_name = "replications_" + name + "_" + label +
                       (kind == SamplingKind::Quadrant
                            ? std::string()
                            : "_n" + std::to_string(n)) +
                       ".csv";
      if (!file_names.insert(unit.file_name).second)
        throw ConfigError(where + ": duplicate output unit '" +
                          unit.file_name + "'");
      unit.cfg.source = source;
      unit.cfg.design.kind = kind;
      unit.cfg.design.n = n;
      unit.cfg.design.quadrants = std::move(quadrants);
      unit.cfg.design.walk_score = walk_score;
      unit.cfg.replications = reps;
      unit.cfg.bootstraps = boots;
      unit.cfg.uniform_bootstrap = uniform_boot;
      unit.cfg.master_seed = derive_seed(
          plan.master_seed, kTagUnit, static_cast<std::uint64_t>(unit_index));
      ++unit_index;
      plan.units.push_back(std::move(unit));
    };

    for (const json& dj : designs) {
      SamplingKind kind =
          sampling_from_token(as<std::string>(dj, where + ".designs"));
      if (kind == SamplingKind::Quadrant) {
        if (!has_coords)
          throw ConfigError(where +
                            ": quadrant sampling needs planar coordinates "
                            "(normal generator)");
        const json& sets = require_key(e, "quadrant_sets", where);
        if (!sets.is_array() || sets.empty())
          throw ConfigError(where +
                            ".quadrant_sets: must be a non-empty array");
        for (const json& sj : sets) {
          if (!sj.is_array() || sj.empty())
            throw ConfigError(where +
                              ".quadrant_sets: each set must be a non-empty "
                              "array of quadrants");
          std::vector<Quadrant> qs;
          std::string label = "quadrant";
          for (const json& qj : sj) {
            std::string qt = as<std::string>(qj, where + ".quadrant_sets");
            qs.push_back(quadrant_from_token(qt));
            label += "-" + qt;
          }
          add_unit(kind, 0, std::move(qs), label);
        }
      } else {
        const json& sizes = require_key(e, "sample_sizes", where);
        if (!sizes.is_array() || sizes.empty())
          throw ConfigError(where +
                            ".sample_sizes: must be a non-empty array");
        for (const json& nj : sizes) {
          int n = as<int>(nj, where + ".sample_sizes");
          if (n < 1 || n > population_n)
            throw ConfigError(where + ".sample_sizes: " + std::to_string(n) +
                              " outside [1, " + std::to_string(population_n) +
                              "]");
          add_unit(kind, n, {}, sampling_token(kind));
        }
      }
    }
  }
  return plan;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

json report_to_json(const PreprocessReport& rep) {
  json j{{"input_nodes", rep.input_nodes},
         {"input_edges", rep.input_edges},
         {"dropped_edges", rep.dropped_edges},
         {"removed_isolates", rep.removed_isolates},
         {"imputed_zeros", rep.imputed_zeros},
         {"output_nodes", rep.output_nodes},
         {"output_edges", rep.output_edges},
         {"output_components", rep.output_components}};
  if (std::isfinite(rep.threshold)) j["threshold"] = rep.threshold;
  if (rep.imputed_zeros > 0) {
    j["min_positive_distance"] = rep.min_positive_distance;
    j["imputed_value"] = rep.imputed_value;
  }
  return j;
}

std::vector<EdgelistRecord> forest_records(const WeightedGraph& g,
                                           const Forest& f) {
  std::vector<EdgelistRecord> records;
  records.reserve(f.edges.size());
  for (EdgeId e : f.edges) {
    const Edge& ed = g.edge(e);
    EdgelistRecord rec;
    rec.id_a = g.has_names() ? g.name(ed.u) : std::to_string(ed.u);
    rec.id_b = g.has_names() ? g.name(ed.v) : std::to_string(ed.v);
    rec.distance = ed.w;
    if (g.has_regions()) {
      rec.region_a = g.region(ed.u);
      rec.region_b = g.region(ed.v);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 int workers, bool quiet) {
  json root = user_input([&] {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config '" + config_path + "'");
    return json::parse(in);
  });
  Plan plan = user_input([&] { return build_plan(root); });

  fs::create_directories(out_dir);
  std::vector<SummaryRow> summary_rows;
  json manifest_units = json::array();
  for (const PlanUnit& unit : plan.units) {
    auto progress = [&](int done, int total) {
      int step = std::max(1, total / 10);
      if (done % step == 0 || done == total)
        std::cerr << "  " << unit.file_name << ": " << done << "/" << total
                  << "\n";
    };
    if (!quiet)
      std::cerr << unit.experiment << " " << unit.sampling
                << (unit.n > 0 ? " n=" + std::to_string(unit.n) : "") << " ("
                << unit.cfg.replications << " replications)\n";
    std::vector<ReplicationResult> results = run_experiment(
        unit.cfg, workers,
        quiet ? std::function<void(int, int)>() : progress);

    std::ostringstream csv;
    write_replication_csv(csv, results);
    write_file(fs::path(out_dir) / unit.file_name, csv.str());

    for (SummaryRow& row :
         summarize_results(unit.experiment, unit.sampling, unit.n, results))
      summary_rows.push_back(std::move(row));
    if (unit.cfg.design.kind == SamplingKind::Quadrant) {
      std::vector<double> fractions;
      for (const ReplicationResult& r : results)
        if (r.pop_nodes > 0)
          fractions.push_back(static_cast<double>(r.sample_nodes) /
                              static_cast<double>(r.pop_nodes));
      if (fractions.size() >= 2)
        summary_rows.push_back({unit.experiment, unit.sampling, unit.n,
                                "sampled_fraction", mean_ci(fractions)});
    }

    manifest_units.push_back(json{{"experiment", unit.experiment},
                                  {"sampling", unit.sampling},
                                  {"n", unit.n},
                                  {"seed", unit.cfg.master_seed},
                                  {"file", unit.file_name}});
  }

  std::ostringstream summary;
  write_summary_csv(summary, summary_rows);
  write_file(fs::path(out_dir) / "summary.csv", summary.str());

  json manifest{{"version", kVersion},
                {"master_seed", plan.master_seed},
                {"config", root},
                {"units", manifest_units}};
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

  if (!quiet)
    std::cerr << "wrote " << plan.units.size() << " unit(s) to " << out_dir
              << "\n";
  return 0;
}

int cmd_mst(const std::string& input, double threshold, ZeroPolicy policy,
            std::uint64_t seed, const std::string& out_path) {
  PreprocessResult pre = user_input(
      [&] { return preprocess(load_edgelist(input), threshold, policy); });
  const WeightedGraph& g = pre.graph;
  EdgeOrdering ord = fixed_ordering(g, seed);
  Forest f = msf(g, ord);

  json stats{{"nodes", g.node_count()},
             {"edges", g.edge_count()},
             {"components", pre.report.output_components},
             {"mst_edges", f.edges.size()},
             {"mst_weight", forest_weight(g, f)},
             {"total_weight", g.total_weight()},
             {"seed", seed},
             {"preprocess", report_to_json(pre.report)}};
  std::cout << stats.dump(2) << "\n";

  if (!out_path.empty()) {
    std::ostringstream csv;
    write_edgelist_csv(csv, forest_records(g, f));
    write_file(out_path, csv.str());
  }
  return 0;
}

int cmd_ingest(const std::string& input, double threshold, ZeroPolicy policy,
               const std::string& out_path) {
  PreprocessResult pre = user_input(
      [&] { return preprocess(load_edgelist(input), threshold, policy); });
  std::cout << report_to_json(pre.report).dump(2) << "\n";
  if (!out_path.empty()) {
    std::ostringstream csv;
    write_edgelist_csv(csv, to_records(pre.graph));
    write_file(out_path, csv.str());
  }
  return 0;
}

int cmd_sample(const std::string& input, double threshold, ZeroPolicy policy,
               const std::string& kind_token, int n, std::uint64_t seed,
               const std::string& walk_score_token,
               const std::string& out_path) {
  SamplingKind kind = sampling_from_token(kind_token);
  if (kind == SamplingKind::Quadrant)
    throw ConfigError("edgelist graphs carry no coordinates; "
                      "quadrant sampling applies to generated graphs");
  PreprocessResult pre = user_input(
      [&] { return preprocess(load_edgelist(input), threshold, policy); });
  SampleDesign design;
  design.kind = kind;
  design.n = n;
  design.walk_score = walk_score_from_token(walk_score_token);
  design.seed = seed;
  NodeSubset subset =
      user_input([&] { return sample(pre.graph, design); });

  std::ostringstream csv;
  csv << "order,node\n";
  for (std::size_t i = 0; i < subset.order_recorded.size(); ++i) {
    NodeId v = subset.order_recorded[i];
    csv << i << ','
        << (pre.graph.has_names() ? pre.graph.name(v) : std::to_string(v))
        << '\n';
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

int cmd_report(const std::string& input, const std::string& graph_label,
               const std::string& sampling_label, int n,
               const std::string& out_path) {
  std::vector<ReplicationResult> results = user_input([&] {
    std::ifstream in(input);
    if (!in) throw ConfigError("cannot open '" + input + "'");
    return read_replication_csv(in);
  });
  std::ostringstream csv;
  write_summary_csv(csv,
                    summarize_results(graph_label, sampling_label, n, results));
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

// ---- theorem oracle suite -------------------------------------------------

WeightedGraph random_small_graph(Rng& rng, int max_nodes, int max_edges,
                                 int pool_values) {
  int n = 2 + static_cast<int>(
                  rng.next_below(static_cast<std::uint64_t>(max_nodes - 1)));
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  rng.shuffle(pairs);
  std::size_t m =
      1 + rng.next_below(std::min<std::uint64_t>(max_edges, pairs.size()));
  GraphData d;
  d.node_count = n;
  for (std::size_t i = 0; i < m; ++i) {
    double w = pool_values > 0
                   ? 0.25 * (1.0 + static_cast<double>(rng.next_below(
                                 static_cast<std::uint64_t>(pool_values))))
                   : rng.uniform_open01();
    d.edges.push_back({pairs[i].first, pairs[i].second, w});
  }
  return WeightedGraph(std::move(d));
}

WeightedGraph random_generated_graph(Rng& rng, int which) {
  int n = 8 + static_cast<int>(rng.next_below(25));
  std::uint64_t seed = rng.next_u64();
  switch (which % 4) {
    case 0: return gen_complete(n, seed);
    case 1: return gen_gnp(n, 0.2 + 0.6 * rng.uniform01(), seed);
    case 2: return gen_normal(n, seed);
    default:
      return gen_barabasi_albert(
          n, 1 + static_cast<int>(rng.next_below(3)), seed);
  }
}

// Total weight-consistent orderings: product of k! per equal-weight group.
double ordering_space(const WeightedGraph& g) {
  std::map<double, int> groups;
  for (const Edge& e : g.edges()) ++groups[e.w];
  double total = 1.0;
  for (const auto& [w, k] : groups)
    for (int i = 2; i <= k; ++i) total *= i;
  return total;
}

std::optional<std::string> witness_failure(const WeightedGraph& g,
                                           const Forest& from,
                                           const Forest& to) {
  const double best = forest_weight(g, from);
  std::vector<EdgeSwap> swaps = exchange_witness(from, to, g);
  Forest cur = from;
  for (const EdgeSwap& s : swaps) {
    if (!std::binary_search(cur.edges.begin(), cur.edges.end(), s.removed))
      return "swap removes an absent edge";
    if (g.edge(s.removed).w != g.edge(s.added).w)
      return "swap weights differ";
    cur.edges.erase(
        std::lower_bound(cur.edges.begin(), cur.edges.end(), s.removed));
    cur.edges.insert(
        std::lower_bound(cur.edges.begin(), cur.edges.end(), s.added),
        s.added);
    if (!is_spanning_forest(g, cur)) return "intermediate is not spanning";
    if (forest_weight(g, cur) != best) return "intermediate is not minimal";
  }
  if (!(cur == to)) return "sequence does not reach the target forest";
  return std::nullopt;
}

struct TheoremCheck {
  const char* name;
  // Returns a failure detail, or nothing when the trial passes.
  std::function<std::optional<std::string>(Rng&, int)> trial;
};

int cmd_theorems(std::uint64_t seed, int max_nodes, int trials,
                 bool inject_fault) {
  std::vector<TheoremCheck> checks;

  checks.push_back({"forest-size", [](Rng& rng, int t) -> std::optional<std::string> {
    WeightedGraph g = random_generated_graph(rng, t);
    Forest f = msf(g, weight_ordering(g, rng.next_u64()));
    if (static_cast<int>(f.edges.size()) !=
        g.node_count() - component_count(g))
      return "forest size is not nodes minus components";
    if (!is_spanning_forest(g, f)) return "result is not a spanning forest";
    return std::nullopt;
  }});

  checks.push_back({"minimality", [max_nodes](Rng& rng, int t) -> std::optional<std::string> {
    WeightedGraph g = random_small_graph(rng, max_nodes, 10, t % 2 ? 3 : 0);
    std::vector<Forest> all = enumerate_msts(g);
    Forest f = msf(g, weight_ordering(g, rng.next_u64()));
    if (std::find(all.begin(), all.end(), f) == all.end())
      return "forest is absent from the enumerated minimum set";
    return std::nullopt;
  }});

  checks.push_back({"cut-property", [max_nodes](Rng& rng, int t) -> std::optional<std::string> {
    WeightedGraph g = random_small_graph(rng, max_nodes + 1, 14, t % 2 ? 4 : 0);
    EdgeOrdering ord = weight_ordering(g, rng.next_u64());
    Forest f = msf(g, ord);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (check_cut_property(g, ord, e) !=
          std::binary_search(f.edges.begin(), f.edges.end(), e))
        return "cut membership disagrees with the forest";
    return std::nullopt;
  }});

  checks.push_back({"cycle-property", [max_nodes](Rng& rng, int t) -> std::optional<std::string> {
    WeightedGraph g = random_small_graph(rng, max_nodes + 1, 14, t % 2 ? 4 : 0);
    EdgeOrdering ord = weight_ordering(g, rng.next_u64());
    Forest f = msf(g, ord);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (check_cycle_property(g, ord, e) ==
          std::binary_search(f.edges.begin(), f.edges.end(), e))
        return "cycle exclusion disagrees with the forest";
    return std::nullopt;
  }});

  checks.push_back({"npv", [inject_fault](Rng& rng, int t) -> std::optional<std::string> {
    WeightedGraph g = random_generated_graph(rng, t);
    EdgeOrdering ord = weight_ordering(g, rng.next_u64());
    Forest t_pop = msf(g, ord);

    SampleDesign design;
    SamplingKind kinds[] = {SamplingKind::Uniform, SamplingKind::Near,
                            SamplingKind::Far, SamplingKind::RandomWalk};
    design.kind = kinds[(t / 4) % 4];
    design.n = 1 + static_cast<int>(rng.next_below(
                       static_cast<std::uint64_t>(g.node_count())));
    design.seed = rng.next_u64();
    InducedSubgraph sub = induced_subgraph(g, sample(g, design));
    Forest t_n = msf(sub.graph, restrict_ordering(ord, sub.edge_to_parent));
    Forest t_n_parent;
    for (EdgeId e : t_n.edges)
      t_n_parent.edges.push_back(
          sub.edge_to_parent[static_cast<std::size_t>(e)]);
    std::sort(t_n_parent.edges.begin(), t_n_parent.edges.end());

    if (inject_fault) {
      // Negative control: drop one shared edge; the check must notice.
      for (EdgeId e : t_n_parent.edges)
        if (std::binary_search(t_pop.edges.begin(), t_pop.edges.end(), e)) {
          t_n_parent.edges.erase(std::find(t_n_parent.edges.begin(),
                                           t_n_parent.edges.end(), e));
          if (verify_npv(t_pop, sub.edge_to_parent, t_n_parent))
            return "injected corruption went unnoticed";
          return "injected corruption detected as intended";
        }
      return std::nullopt;  // no shared edge to corrupt; try the next trial
    }
    if (!verify_npv(t_pop, sub.edge_to_parent, t_n_parent))
      return "a sampled population-forest edge is missing from the sample forest";
    return std::nullopt;
  }});

  checks.push_back({"ordering-census", [max_nodes](Rng& rng, int) -> std::optional<std::string> {
    for (int attempt = 0; attempt < 100; ++attempt) {
      WeightedGraph g = random_small_graph(rng, max_nodes, 10, 3);
      if (ordering_space(g) > 20000.0) continue;
      auto counts = count_orderings_per_mst(g);
      auto all = enumerate_msts(g);
      if (counts.size() != all.size())
        return "census keys differ from the enumerated set";
      std::uint64_t total = 0;
      for (const auto& [forest, count] : counts) total += count;
      if (static_cast<double>(total) != ordering_space(g))
        return "census total misses the ordering space size";
      return std::nullopt;
    }
    return "no instance within the ordering-space cap";
  }});

  checks.push_back({"exchange", [max_nodes](Rng& rng, int) -> std::optional<std::string> {
    for (int attempt = 0; attempt < 100; ++attempt) {
      WeightedGraph g = random_small_graph(rng, max_nodes, 10, 3);
      if (ordering_space(g) > 20000.0) continue;
      auto all = enumerate_msts(g);
      if (all.size() < 2 || all.size() > 8) continue;
      for (const Forest& a : all)
        for (const Forest& b : all)
          if (auto fail = witness_failure(g, a, b)) return fail;
      return std::nullopt;
    }
    return "no instance with multiple minimum forests";
  }});

  bool all_pass = true;
  for (std::size_t ci = 0; ci < checks.size(); ++ci) {
    const TheoremCheck& check = checks[ci];
    std::optional<std::string> failure;
    std::uint64_t failing_trial = 0;
    for (int t = 0; t < trials && !failure; ++t) {
      Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(ci),
                          static_cast<std::uint64_t>(t)));
      failure = check.trial(rng, t);
      failing_trial = static_cast<std::uint64_t>(t);
    }
    if (failure) {
      std::cout << "FAIL " << check.name << ": " << *failure << " (seed="
                << seed << ", trial=" << failing_trial << ")\n";
      all_pass = false;
    } else {
      std::cout << "PASS " << check.name << " (" << trials << " trials)\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum spanning forests under node sampling"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "run config-driven sampling experiments");
  std::string sim_config, sim_out_dir;
  int sim_workers = 1;
  bool sim_quiet = false;
  simulate->add_option("--config", sim_config, "JSON run configuration")
      ->required();
  simulate->add_option("--out-dir", sim_out_dir, "output directory")
      ->required();
  simulate->add_option("--workers", sim_workers, "worker threads")
      ->check(CLI::Range(1, 256));
  simulate->add_flag("--quiet", sim_quiet, "suppress progress output");

  // mst
  auto* mst_cmd = app.add_subcommand(
      "mst", "minimum spanning forest of an edgelist");
  std::string mst_input, mst_out, mst_zero = "after";
  double mst_threshold = std::numeric_limits<double>::infinity();
  double mst_threshold_pct = 0.0;
  std::uint64_t mst_seed = 0;
  mst_cmd->add_option("--input", mst_input, "edgelist CSV")->required();
  auto* mst_t = mst_cmd->add_option("--threshold", mst_threshold,
                                    "drop edges with distance above this")
                    ->check(CLI::PositiveNumber);
  mst_cmd->add_option("--threshold-pct", mst_threshold_pct,
                      "threshold as a percentage")
      ->check(CLI::PositiveNumber)
      ->excludes(mst_t);
  mst_cmd->add_option("--zero-policy", mst_zero,
                      "impute zeros after|before filtering");
  mst_cmd->add_option("--seed", mst_seed, "tie-breaking seed");
  mst_cmd->add_option("--out", mst_out, "write the forest edgelist here");

  // ingest
  auto* ingest_cmd = app.add_subcommand(
      "ingest", "preprocess an edgelist and report");
  std::string ing_input, ing_out, ing_zero = "after";
  double ing_threshold = 0.015;
  double ing_threshold_pct = 0.0;
  ingest_cmd->add_option("--input", ing_input, "edgelist CSV")->required();
  auto* ing_t = ingest_cmd->add_option("--threshold", ing_threshold,
                                       "drop edges with distance above this")
                    ->check(CLI::PositiveNumber);
  ingest_cmd->add_option("--threshold-pct", ing_threshold_pct,
                         "threshold as a percentage")
      ->check(CLI::PositiveNumber)
      ->excludes(ing_t);
  ingest_cmd->add_option("--zero-policy", ing_zero,
                         "impute zeros after|before filtering");
  ingest_cmd->add_option("--out", ing_out,
                         "write the preprocessed edgelist here");

  // sample
  auto* sample_cmd = app.add_subcommand(
      "sample", "draw a node sample from an edgelist graph");
  std::string smp_input, smp_out, smp_kind = "uniform";
  std::string smp_walk = "strength", smp_zero = "after";
  double smp_threshold = std::numeric_limits<double>::infinity();
  double smp_threshold_pct = 0.0;
  int smp_n = 0;
  std::uint64_t smp_seed = 0;
  sample_cmd->add_option("--input", smp_input, "edgelist CSV")->required();
  sample_cmd->add_option("--kind", smp_kind,
                         "uniform|near|far|walk sampling strategy");
  sample_cmd->add_option("--n", smp_n, "sample size")->required();
  sample_cmd->add_option("--seed", smp_seed, "sampling seed");
  sample_cmd->add_option("--walk-score", smp_walk,
                         "walk closeness: strength|edge_weight");
  auto* smp_t = sample_cmd->add_option("--threshold", smp_threshold,
                                       "drop edges with distance above this")
                    ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--threshold-pct", smp_threshold_pct,
                         "threshold as a percentage")
      ->check(CLI::PositiveNumber)
      ->excludes(smp_t);
  sample_cmd->add_option("--zero-policy", smp_zero,
                         "impute zeros after|before filtering");
  sample_cmd->add_option("--out", smp_out, "write the sample CSV here");

  // theorems
  auto* theorems_cmd = app.add_subcommand(
      "theorems", "randomized checks of the structural guarantees");
  std::uint64_t thm_seed = 0;
  int thm_max_nodes = 8, thm_trials = 200;
  bool thm_inject = false;
  theorems_cmd->add_option("--seed", thm_seed, "base seed");
  theorems_cmd->add_option("--max-nodes", thm_max_nodes,
                           "node cap for exhaustive checks")
      ->check(CLI::Range(3, 10));
  theorems_cmd->add_option("--trials", thm_trials, "trials per check")
      ->check(CLI::Range(1, 1000000));
  theorems_cmd->add_flag("--inject-fault", thm_inject,
                         "corrupt a sample forest to prove the check bites");

  // report
  auto* report_cmd = app.add_subcommand(
      "report", "summarize a replications CSV");
  std::string rep_input, rep_out, rep_graph = "graph", rep_sampling = "sample";
  int rep_n = 0;
  report_cmd->add_option("--input", rep_input, "replications CSV")->required();
  report_cmd->add_option("--graph", rep_graph, "graph label");
  report_cmd->add_option("--sampling", rep_sampling, "sampling label");
  report_cmd->add_option("--n", rep_n, "sample size label");
  report_cmd->add_option("--out", rep_out, "write the summary CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(simulate))
      return cmd_simulate(sim_config, sim_out_dir, sim_workers, sim_quiet);
    if (app.got_subcommand(mst_cmd))
      return cmd_mst(mst_input,
                     mst_threshold_pct > 0.0 ? mst_threshold_pct / 100.0
                                             : mst_threshold,
                     zero_policy_from_token(mst_zero), mst_seed, mst_out);
    if (app.got_subcommand(ingest_cmd))
      return cmd_ingest(ing_input,
                        ing_threshold_pct > 0.0 ? ing_threshold_pct / 100.0
                                                : ing_threshold,
                        zero_policy_from_token(ing_zero), ing_out);
    if (app.got_subcommand(sample_cmd))
      return cmd_sample(smp_input,
                        smp_threshold_pct > 0.0 ? smp_threshold_pct / 100.0
                                                : smp_threshold,
                        zero_policy_from_token(smp_zero), smp_kind, smp_n,
                        smp_seed, smp_walk, smp_out);
    if (app.got_subcommand(theorems_cmd))
      return cmd_theorems(thm_seed, thm_max_nodes, thm_trials, thm_inject);
    if (app.got_subcommand(report_cmd))
      return cmd_report(rep_input, rep_graph, rep_sampling, rep_n, rep_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
