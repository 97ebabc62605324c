#include "mstinfer/mst.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace mstinfer {

namespace {

struct UnionFind {
  std::vector<NodeId> parent;

  explicit UnionFind(NodeId n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  NodeId find(NodeId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(NodeId a, NodeId b) {
    NodeId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
    return true;
  }
};

void check_ordering(const WeightedGraph& g, const EdgeOrdering& ordering) {
  if (ordering.edge_count() != g.edge_count())
    throw std::invalid_argument("ordering does not match graph edge count");
}

// Adjacency limited to a set of forest edges.
std::vector<std::vector<IncidentEdge>> forest_adjacency(
    const WeightedGraph& g, std::span<const EdgeId> edges) {
  std::vector<std::vector<IncidentEdge>> adj(
      static_cast<std::size_t>(g.node_count()));
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
  return adj;
}

bool forest_contains(const Forest& f, EdgeId e) {
  return std::binary_search(f.edges.begin(), f.edges.end(), e);
}

}  // namespace

Forest msf(const WeightedGraph& g, const EdgeOrdering& ordering) {
  check_ordering(g, ordering);
  UnionFind uf(g.node_count());
  Forest f;
  for (EdgeId e : ordering.by_rank()) {
    const Edge& ed = g.edge(e);
    if (uf.unite(ed.u, ed.v)) f.edges.push_back(e);
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

double forest_weight(const WeightedGraph& g, const Forest& f) {
  std::vector<double> ws;
  ws.reserve(f.edges.size());
  for (EdgeId e : f.edges) ws.push_back(g.edge(e).w);
  std::sort(ws.begin(), ws.end());
  double total = 0.0;
  for (double w : ws) total += w;
  return total;
}

bool is_spanning_forest(const WeightedGraph& g, const Forest& f) {
  if (!std::is_sorted(f.edges.begin(), f.edges.end()) ||
      std::adjacent_find(f.edges.begin(), f.edges.end()) != f.edges.end())
    return false;
  UnionFind uf(g.node_count());
  for (EdgeId e : f.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (!uf.unite(ed.u, ed.v)) return false;  // cycle
  }
  // Acyclic with n - K edges means one tree per component, hence spanning.
  long long target = g.node_count() - component_count(g);
  return static_cast<long long>(f.edges.size()) == target;
}

std::vector<Forest> enumerate_msts(const WeightedGraph& g, int max_edges) {
  EdgeId m = g.edge_count();
  if (m > max_edges || m >= 30)
    throw SizeLimitError("enumerate_msts: edge count exceeds cap");
  int target = g.node_count() - component_count(g);
  double best = forest_weight(g, msf(g, weight_ordering(g, 0)));

  std::vector<Forest> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != target) continue;
    Forest f;
    for (EdgeId e = 0; e < m; ++e)
      if (mask & (1u << e)) f.edges.push_back(e);
    UnionFind uf(g.node_count());
    bool acyclic = true;
    for (EdgeId e : f.edges) {
      const Edge& ed = g.edge(e);
      if (!uf.unite(ed.u, ed.v)) {
        acyclic = false;
        break;
      }
    }
    // An acyclic edge set of the target size spans every component; keeping
    // only those with minimum total weight leaves exactly the minimum
    // spanning forests.
    if (acyclic && forest_weight(g, f) == best) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Forest, std::uint64_t> count_orderings_per_mst(
    const WeightedGraph& g, std::uint64_t max_orderings) {
  // Equal-weight groups in ascending weight order.
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    double wa = g.edge(a).w, wb = g.edge(b).w;
    return wa != wb ? wa < wb : a < b;
  });
  std::vector<std::vector<EdgeId>> groups;
  std::size_t lo = 0;
  while (lo < ids.size()) {
    std::size_t hi = lo + 1;
    while (hi < ids.size() && g.edge(ids[hi]).w == g.edge(ids[lo]).w) ++hi;
    groups.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(lo),
                        ids.begin() + static_cast<std::ptrdiff_t>(hi));
    lo = hi;
  }

  std::uint64_t total = 1;
  for (const auto& grp : groups) {
    for (std::uint64_t k = 2; k <= grp.size(); ++k) {
      if (total > max_orderings / k)
        throw SizeLimitError("count_orderings_per_mst: ordering count exceeds cap");
      total *= k;
    }
  }

  // Odometer over per-group permutations: visits every weight-consistent
  // ordering exactly once.
  std::map<Forest, std::uint64_t> counts;
  std::vector<EdgeId> by_rank(ids.size());
  for (;;) {
    std::size_t pos = 0;
    for (const auto& grp : groups)
      for (EdgeId e : grp) by_rank[pos++] = e;
    ++counts[msf(g, EdgeOrdering(by_rank))];

    std::size_t i = 0;
    while (i < groups.size() &&
           !std::next_permutation(groups[i].begin(), groups[i].end()))
      ++i;
    if (i == groups.size()) break;
  }
  return counts;
}

bool check_cycle_property(const WeightedGraph& g, const EdgeOrdering& ordering,
                          EdgeId e) {
  check_ordering(g, ordering);
  const Edge& ed = g.edge(e);
  const int rank_e = ordering.rank(e);
  // Minimax path search: lowest achievable maximum rank from ed.u to each
  // node, never using e itself.
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kInf);
  using Item = std::pair<int, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(ed.u)] = 0;
  heap.push({0, ed.u});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(x)]) continue;
    if (x == ed.v) break;
    for (const IncidentEdge& ie : g.neighbors(x)) {
      if (ie.edge == e) continue;
      int nd = std::max(d, ordering.rank(ie.edge));
      if (nd < dist[static_cast<std::size_t>(ie.neighbor)]) {
        dist[static_cast<std::size_t>(ie.neighbor)] = nd;
        heap.push({nd, ie.neighbor});
      }
    }
  }
  return dist[static_cast<std::size_t>(ed.v)] < rank_e;
}

bool check_cut_property(const WeightedGraph& g, const EdgeOrdering& ordering,
                        EdgeId e) {
  check_ordering(g, ordering);
  const Edge& ed = g.edge(e);
  const int rank_e = ordering.rank(e);
  // Grow the side of the cut reachable from ed.u over strictly lower-ranked
  // edges. If ed.v stays outside, that reachable set defines a cut in which
  // e is the unique lowest-ranked crossing edge.
  std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::queue<NodeId> q;
  seen[static_cast<std::size_t>(ed.u)] = 1;
  q.push(ed.u);
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (const IncidentEdge& ie : g.neighbors(x)) {
      if (ordering.rank(ie.edge) >= rank_e) continue;
      if (!seen[static_cast<std::size_t>(ie.neighbor)]) {
        seen[static_cast<std::size_t>(ie.neighbor)] = 1;
        q.push(ie.neighbor);
      }
    }
  }
  return !seen[static_cast<std::size_t>(ed.v)];
}

bool verify_npv(const Forest& population_msf,
                std::span<const EdgeId> sample_edges,
                const Forest& sample_msf) {
  for (EdgeId e : sample_msf.edges)
    if (std::find(sample_edges.begin(), sample_edges.end(), e) ==
        sample_edges.end())
      throw std::invalid_argument("verify_npv: sample forest not within sample edges");
  for (EdgeId e : sample_edges) {
    if (forest_contains(population_msf, e) && !forest_contains(sample_msf, e))
      return false;
  }
  return true;
}

std::vector<EdgeSwap> exchange_witness(const Forest& from, const Forest& to,
                                       const WeightedGraph& g) {
  const double best = forest_weight(g, msf(g, weight_ordering(g, 0)));
  for (const Forest* f : {&from, &to}) {
    if (!is_spanning_forest(g, *f) || forest_weight(g, *f) != best)
      throw std::invalid_argument(
          "exchange_witness: input is not a minimum spanning forest");
  }

  std::vector<EdgeSwap> swaps;
  Forest cur = from;
  while (cur != to) {
    // Lightest edge (smallest id on ties) of cur that to lacks.
    EdgeId removed = -1;
    for (EdgeId e : cur.edges) {
      if (forest_contains(to, e)) continue;
      if (removed < 0 || g.edge(e).w < g.edge(removed).w) removed = e;
    }

    // Side of the cut opened by deleting `removed`: the component of its
    // first endpoint within cur minus the edge.
    const Edge& red = g.edge(removed);
    std::vector<char> side(static_cast<std::size_t>(g.node_count()), 0);
    {
      auto adj = forest_adjacency(g, cur.edges);
      std::queue<NodeId> q;
      side[static_cast<std::size_t>(red.u)] = 1;
      q.push(red.u);
      while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (const IncidentEdge& ie : adj[static_cast<std::size_t>(x)]) {
          if (ie.edge == removed) continue;
          if (!side[static_cast<std::size_t>(ie.neighbor)]) {
            side[static_cast<std::size_t>(ie.neighbor)] = 1;
            q.push(ie.neighbor);
          }
        }
      }
    }

    // Unique path between the removed edge's endpoints within `to`; the first
    // path edge crossing the cut is the replacement, and the minimality of
    // both forests forces its weight to match.
    EdgeId added = -1;
    {
      auto adj = forest_adjacency(g, to.edges);
      std::vector<EdgeId> via(static_cast<std::size_t>(g.node_count()), -1);
      std::vector<NodeId> prev(static_cast<std::size_t>(g.node_count()), -1);
      std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
      std::queue<NodeId> q;
      seen[static_cast<std::size_t>(red.u)] = 1;
      q.push(red.u);
      while (!q.empty() && !seen[static_cast<std::size_t>(red.v)]) {
        NodeId x = q.front();
        q.pop();
        for (const IncidentEdge& ie : adj[static_cast<std::size_t>(x)]) {
          std::size_t nb = static_cast<std::size_t>(ie.neighbor);
          if (!seen[nb]) {
            seen[nb] = 1;
            via[nb] = ie.edge;
            prev[nb] = x;
            q.push(ie.neighbor);
          }
        }
      }
      if (!seen[static_cast<std::size_t>(red.v)])
        throw std::logic_error("exchange_witness: forests span different components");
      for (NodeId x = red.v; x != red.u; x = prev[static_cast<std::size_t>(x)]) {
        EdgeId pe = via[static_cast<std::size_t>(x)];
        const Edge& ped = g.edge(pe);
        if (side[static_cast<std::size_t>(ped.u)] !=
            side[static_cast<std::size_t>(ped.v)]) {
          added = pe;
          break;
        }
      }
    }
    if (added < 0 || g.edge(added).w != g.edge(removed).w)
      throw std::logic_error("exchange_witness: no equal-weight replacement");

    cur.edges.erase(
        std::lower_bound(cur.edges.begin(), cur.edges.end(), removed));
    cur.edges.insert(
        std::lower_bound(cur.edges.begin(), cur.edges.end(), added), added);
    swaps.push_back({removed, added});
  }
  return swaps;
}

}  // namespace mstinfer
