#include "mstinfer/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "mstinfer/rng.hpp"

namespace mstinfer {

namespace {

void check_size(const WeightedGraph& g, int n) {
  if (n < 0 || n > g.node_count())
    throw std::invalid_argument("sample: size must lie in [0, node count]");
}

// Draws n nodes sequentially without replacement, odds proportional to
// static per-node weights (renormalized implicitly as entries are removed).
NodeSubset draw_weighted(const WeightedGraph& g, int n,
                         std::vector<double> weights, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeId> pool(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v)
    pool[static_cast<std::size_t>(v)] = v;
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::size_t idx = rng.weighted_index(weights);
    order.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return make_subset(std::move(order));
}

}  // namespace

std::vector<double> near_weights(const WeightedGraph& g) {
  std::size_t n = static_cast<std::size_t>(g.node_count());
  std::vector<double> w(n);
  if (n == 1) {  // degenerate: single node counts as complete
    w[0] = 1.0;
    return w;
  }
  if (g.is_complete()) {
    std::vector<double> s(n);
    for (NodeId v = 0; v < g.node_count(); ++v)
      s[static_cast<std::size_t>(v)] = g.strength(v);
    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    for (std::size_t i = 0; i < n; ++i) w[i] = *hi - s[i] + *lo;
  } else {
    int min_deg = g.node_count();
    for (NodeId v = 0; v < g.node_count(); ++v)
      min_deg = std::min(min_deg, g.degree(v));
    for (NodeId v = 0; v < g.node_count(); ++v)
      w[static_cast<std::size_t>(v)] = g.degree(v) + (min_deg == 0 ? 1 : 0);
  }
  return w;
}

std::vector<double> far_weights(const WeightedGraph& g) {
  std::size_t n = static_cast<std::size_t>(g.node_count());
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  if (g.is_complete()) {
    for (NodeId v = 0; v < g.node_count(); ++v)
      w[static_cast<std::size_t>(v)] = g.strength(v);
  } else {
    int min_deg = g.node_count(), max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      min_deg = std::min(min_deg, g.degree(v));
      max_deg = std::max(max_deg, g.degree(v));
    }
    double base = std::max(1, min_deg);
    for (NodeId v = 0; v < g.node_count(); ++v)
      w[static_cast<std::size_t>(v)] = max_deg - g.degree(v) + base;
  }
  return w;
}

std::vector<double> walk_neighbor_weights(const WeightedGraph& g,
                                          NodeId current, WalkScore score) {
  auto nbrs = g.neighbors(current);
  std::vector<double> raw(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    raw[i] = score == WalkScore::Strength ? g.strength(nbrs[i].neighbor)
                                          : g.edge(nbrs[i].edge).w;
  if (raw.empty()) return raw;
  auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  double mx = *hi, mn = *lo;
  std::vector<double> w(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) w[i] = mx - raw[i] + mn;
  return w;
}

NodeSubset sample_uniform(const WeightedGraph& g, const SampleDesign& design) {
  check_size(g, design.n);
  Rng rng(design.seed);
  std::vector<NodeId> pool(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v)
    pool[static_cast<std::size_t>(v)] = v;
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(design.n));
  for (int k = 0; k < design.n; ++k) {
    std::size_t idx =
        static_cast<std::size_t>(rng.next_below(pool.size()));
    order.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return make_subset(std::move(order));
}

NodeSubset sample_near(const WeightedGraph& g, const SampleDesign& design) {
  check_size(g, design.n);
  return draw_weighted(g, design.n, near_weights(g), design.seed);
}

NodeSubset sample_far(const WeightedGraph& g, const SampleDesign& design) {
  check_size(g, design.n);
  return draw_weighted(g, design.n, far_weights(g), design.seed);
}

NodeSubset sample_random_walk(const WeightedGraph& g,
                              const SampleDesign& design) {
  check_size(g, design.n);
  Rng rng(design.seed);
  std::vector<char> recorded(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(design.n));

  auto record = [&](NodeId v) {
    recorded[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
  };

  while (static_cast<int>(order.size()) < design.n) {
    // Fresh start: uniform over nodes not yet recorded.
    std::vector<NodeId> unrecorded;
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (!recorded[static_cast<std::size_t>(v)]) unrecorded.push_back(v);
    NodeId cur = unrecorded[static_cast<std::size_t>(
        rng.next_below(unrecorded.size()))];
    record(cur);

    while (static_cast<int>(order.size()) < design.n) {
      auto nbrs = g.neighbors(cur);
      if (nbrs.empty()) break;  // isolated: restart
      std::vector<double> odds =
          walk_neighbor_weights(g, cur, design.walk_score);
      NodeId next = nbrs[rng.weighted_index(odds)].neighbor;
      if (recorded[static_cast<std::size_t>(next)]) break;  // restart
      record(next);
      cur = next;
    }
  }
  return make_subset(std::move(order));
}

bool in_quadrant_union(const std::vector<Quadrant>& quadrants, double x,
                       double y) {
  // The two-quadrant union {I, II} historically denotes the x >= 0 halfplane
  // rather than the geometric union; every other set is the plain union of
  // closed quadrants.
  std::vector<Quadrant> qs = quadrants;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  if (qs == std::vector<Quadrant>{Quadrant::I, Quadrant::II}) return x >= 0.0;
  for (Quadrant q : qs) {
    bool in = false;
    switch (q) {
      case Quadrant::I: in = x >= 0.0 && y >= 0.0; break;
      case Quadrant::II: in = x <= 0.0 && y >= 0.0; break;
      case Quadrant::III: in = x <= 0.0 && y <= 0.0; break;
      case Quadrant::IV: in = x >= 0.0 && y <= 0.0; break;
    }
    if (in) return true;
  }
  return false;
}

NodeSubset sample_quadrant(const WeightedGraph& g,
                           const SampleDesign& design) {
  if (design.quadrants.empty())
    throw std::invalid_argument("sample: quadrant set must be non-empty");
  if (!g.has_coords())
    throw std::invalid_argument("sample: quadrant sampling needs coordinates");
  std::vector<NodeId> picked;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& c = g.coord(v);
    if (in_quadrant_union(design.quadrants, c[0], c[1])) picked.push_back(v);
  }
  return make_subset(std::move(picked));
}

NodeSubset sample(const WeightedGraph& g, const SampleDesign& design) {
  switch (design.kind) {
    case SamplingKind::Uniform: return sample_uniform(g, design);
    case SamplingKind::Near: return sample_near(g, design);
    case SamplingKind::Far: return sample_far(g, design);
    case SamplingKind::RandomWalk: return sample_random_walk(g, design);
    case SamplingKind::Quadrant: return sample_quadrant(g, design);
  }
  throw std::invalid_argument("sample: unknown sampling kind");
}

}  // namespace mstinfer
