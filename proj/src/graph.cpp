#include "mstinfer/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mstinfer {

namespace {

void check_attr_size(std::size_t got, std::size_t n, const char* what) {
  if (got != 0 && got != n)
    throw std::invalid_argument(std::string(what) +
                                ": expected one entry per node or none");
}

}  // namespace

WeightedGraph::WeightedGraph(GraphData data) {
  if (data.node_count < 0)
    throw std::invalid_argument("graph: negative node count");
  n_ = data.node_count;
  check_attr_size(data.coords.size(), static_cast<std::size_t>(n_), "coords");
  check_attr_size(data.regions.size(), static_cast<std::size_t>(n_), "regions");
  check_attr_size(data.names.size(), static_cast<std::size_t>(n_), "names");

  edges_ = std::move(data.edges);
  adj_.assign(static_cast<std::size_t>(n_), {});
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("graph: edge weight must be positive and finite");
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument("graph: parallel edge");
    EdgeId id = static_cast<EdgeId>(i);
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
  }
  coords_ = std::move(data.coords);
  regions_ = std::move(data.regions);
  names_ = std::move(data.names);
}

void WeightedGraph::check_node(NodeId v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("graph: unknown node id");
}

const Edge& WeightedGraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw std::out_of_range("graph: unknown edge id");
  return edges_[static_cast<std::size_t>(e)];
}

std::span<const IncidentEdge> WeightedGraph::neighbors(NodeId v) const {
  check_node(v);
  return adj_[static_cast<std::size_t>(v)];
}

int WeightedGraph::degree(NodeId v) const {
  check_node(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

double WeightedGraph::strength(NodeId v) const {
  check_node(v);
  double s = 0.0;
  for (const IncidentEdge& ie : adj_[static_cast<std::size_t>(v)])
    s += edges_[static_cast<std::size_t>(ie.edge)].w;
  return s;
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.w;
  return s;
}

bool WeightedGraph::is_complete() const {
  long long n = n_;
  return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

const std::array<double, 2>& WeightedGraph::coord(NodeId v) const {
  check_node(v);
  if (!has_coords()) throw std::logic_error("graph: no coordinates");
  return coords_[static_cast<std::size_t>(v)];
}

const std::string& WeightedGraph::region(NodeId v) const {
  check_node(v);
  static const std::string empty;
  return has_regions() ? regions_[static_cast<std::size_t>(v)] : empty;
}

const std::string& WeightedGraph::name(NodeId v) const {
  check_node(v);
  if (!has_names()) throw std::logic_error("graph: no node names");
  return names_[static_cast<std::size_t>(v)];
}

NodeSubset make_subset(std::vector<NodeId> recorded_order) {
  NodeSubset s;
  s.members = recorded_order;
  std::sort(s.members.begin(), s.members.end());
  if (std::adjacent_find(s.members.begin(), s.members.end()) !=
      s.members.end())
    throw std::invalid_argument("subset: duplicate node");
  s.order_recorded = std::move(recorded_order);
  return s;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const NodeSubset& s) {
  if (!std::is_sorted(s.members.begin(), s.members.end()) ||
      std::adjacent_find(s.members.begin(), s.members.end()) !=
          s.members.end())
    throw std::invalid_argument("induced_subgraph: members not sorted/unique");
  std::vector<NodeId> to_child(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    NodeId v = s.members[i];
    if (v < 0 || v >= g.node_count())
      throw std::invalid_argument("induced_subgraph: node not in graph");
    to_child[static_cast<std::size_t>(v)] = static_cast<NodeId>(i);
  }

  GraphData d;
  d.node_count = static_cast<NodeId>(s.members.size());
  InducedSubgraph out;
  out.node_to_parent = s.members;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& pe = g.edge(e);
    NodeId cu = to_child[static_cast<std::size_t>(pe.u)];
    NodeId cv = to_child[static_cast<std::size_t>(pe.v)];
    if (cu < 0 || cv < 0) continue;
    d.edges.push_back({cu, cv, pe.w});
    out.edge_to_parent.push_back(e);
  }
  for (NodeId v : s.members) {
    if (g.has_coords()) d.coords.push_back(g.coord(v));
    if (g.has_regions()) d.regions.push_back(g.region(v));
    if (g.has_names()) d.names.push_back(g.name(v));
  }
  out.graph = WeightedGraph(std::move(d));
  return out;
}

std::vector<std::vector<NodeId>> components(const WeightedGraph& g) {
  std::vector<std::vector<NodeId>> blocks;
  std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<NodeId> block;
    std::queue<NodeId> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      block.push_back(v);
      for (const IncidentEdge& ie : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(ie.neighbor)]) {
          seen[static_cast<std::size_t>(ie.neighbor)] = 1;
          q.push(ie.neighbor);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int component_count(const WeightedGraph& g) {
  return static_cast<int>(components(g).size());
}

Cut cut_from_partition(const WeightedGraph& g, std::span<const NodeId> side_a) {
  std::vector<char> in_a(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId v : side_a) {
    if (v < 0 || v >= g.node_count())
      throw std::invalid_argument("cut: node not in graph");
    in_a[static_cast<std::size_t>(v)] = 1;
  }
  Cut cut;
  for (NodeId v = 0; v < g.node_count(); ++v)
    (in_a[static_cast<std::size_t>(v)] ? cut.side_a : cut.side_b).push_back(v);
  if (cut.side_a.empty() || cut.side_b.empty())
    throw std::invalid_argument("cut: side must be a proper non-empty subset");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_a[static_cast<std::size_t>(ed.u)] !=
        in_a[static_cast<std::size_t>(ed.v)])
      cut.crossing_edges.push_back(e);
  }
  return cut;
}

}  // namespace mstinfer
