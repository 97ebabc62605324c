#include "mstinfer/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mstinfer {

namespace {

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("generator: need at least 2 nodes");
}

}  // namespace

WeightedGraph generate(const GeneratorConfig& cfg) {
  switch (cfg.kind) {
    case GraphKind::Complete:
      return gen_complete(cfg.node_count, cfg.seed);
    case GraphKind::Gnp:
      return gen_gnp(cfg.node_count, cfg.p, cfg.seed);
    case GraphKind::Normal:
      return gen_normal(cfg.node_count, cfg.seed);
    case GraphKind::BarabasiAlbert:
      return gen_barabasi_albert(cfg.node_count, cfg.m_attach, cfg.seed);
  }
  throw std::invalid_argument("generator: unknown graph kind");
}

WeightedGraph gen_complete(int n, std::uint64_t seed) {
  check_n(n);
  Rng rng(seed);
  GraphData d;
  d.node_count = n;
  d.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      d.edges.push_back({u, v, rng.uniform_open01()});
  return WeightedGraph(std::move(d));
}

WeightedGraph gen_gnp(int n, double p, std::uint64_t seed) {
  check_n(n);
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("generator: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> full;
  full.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      full.push_back({u, v, rng.uniform_open01()});
  GraphData d;
  d.node_count = n;
  for (const Edge& e : full)
    if (rng.uniform01() < p) d.edges.push_back(e);
  return WeightedGraph(std::move(d));
}

std::vector<std::array<double, 2>> sample_normal_coords(int n, Rng& rng) {
  std::vector<std::array<double, 2>> coords(static_cast<std::size_t>(n));
  for (auto& c : coords) {
    c[0] = rng.normal();
    c[1] = rng.normal();
  }
  return coords;
}

WeightedGraph normal_graph_from_coords(
    std::vector<std::array<double, 2>> coords) {
  int n = static_cast<int>(coords.size());
  check_n(n);
  GraphData d;
  d.node_count = n;
  d.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      double dx = coords[static_cast<std::size_t>(u)][0] -
                  coords[static_cast<std::size_t>(v)][0];
      double dy = coords[static_cast<std::size_t>(u)][1] -
                  coords[static_cast<std::size_t>(v)][1];
      d.edges.push_back({u, v, std::hypot(dx, dy)});
    }
  d.coords = std::move(coords);
  return WeightedGraph(std::move(d));
}

WeightedGraph gen_normal(int n, std::uint64_t seed) {
  check_n(n);
  Rng rng(seed);
  return normal_graph_from_coords(sample_normal_coords(n, rng));
}

WeightedGraph gen_barabasi_albert(int n, int m_attach, std::uint64_t seed) {
  check_n(n);
  if (m_attach < 1 || m_attach >= n)
    throw std::invalid_argument("generator: m_attach must lie in [1, n)");
  Rng rng(seed);
  GraphData d;
  d.node_count = n;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);

  for (NodeId u = 0; u < m_attach; ++u)
    for (NodeId v = u + 1; v < m_attach; ++v) {
      d.edges.push_back({u, v, rng.uniform_open01()});
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }

  for (NodeId t = m_attach; t < n; ++t) {
    // Attachment odds use degrees frozen at this node's arrival; +1 smoothing
    // only when some candidate still has degree zero (the m_attach = 1 seed).
    std::vector<NodeId> cands(static_cast<std::size_t>(t));
    std::iota(cands.begin(), cands.end(), 0);
    bool smooth = false;
    for (NodeId c : cands)
      if (deg[static_cast<std::size_t>(c)] == 0) smooth = true;
    std::vector<double> odds(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
      odds[i] = deg[static_cast<std::size_t>(cands[i])] + (smooth ? 1 : 0);

    std::vector<NodeId> targets;
    for (int k = 0; k < m_attach; ++k) {
      std::size_t idx = rng.weighted_index(odds);
      targets.push_back(cands[idx]);
      cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(idx));
      odds.erase(odds.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    for (NodeId tgt : targets) {
      d.edges.push_back({tgt, t, rng.uniform_open01()});
      ++deg[static_cast<std::size_t>(tgt)];
      ++deg[static_cast<std::size_t>(t)];
    }
  }
  return WeightedGraph(std::move(d));
}

}  // namespace mstinfer
