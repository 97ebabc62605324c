#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mstinfer {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

// Undirected weighted edge, stored canonically with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 0.0;
};

struct IncidentEdge {
  NodeId neighbor = 0;
  EdgeId edge = 0;
};

// Raw material for WeightedGraph. Attribute vectors are either empty or hold
// one entry per node; an empty string means "no label" for that node.
struct GraphData {
  NodeId node_count = 0;
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> coords;
  std::vector<std::string> regions;
  std::vector<std::string> names;
};

// Immutable simple graph with dense node ids 0..n-1 and strictly positive,
// finite edge weights. Construction validates everything and canonicalizes
// endpoint order; afterwards the object is safe to share across threads.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(GraphData data);

  NodeId node_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const IncidentEdge> neighbors(NodeId v) const;

  int degree(NodeId v) const;
  double strength(NodeId v) const;  // sum of incident edge weights
  double total_weight() const;

  bool is_complete() const;  // |E| == n(n-1)/2

  bool has_coords() const { return !coords_.empty(); }
  const std::array<double, 2>& coord(NodeId v) const;

  bool has_regions() const { return !regions_.empty(); }
  const std::string& region(NodeId v) const;

  bool has_names() const { return !names_.empty(); }
  const std::string& name(NodeId v) const;

  std::span<const std::array<double, 2>> coords() const { return coords_; }
  std::span<const std::string> regions() const { return regions_; }
  std::span<const std::string> names() const { return names_; }

 private:
  void check_node(NodeId v) const;

  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidentEdge>> adj_;
  std::vector<std::array<double, 2>> coords_;
  std::vector<std::string> regions_;
  std::vector<std::string> names_;
};

// Node subset that remembers the order nodes were drawn in. `members` is
// sorted and duplicate-free; `order_recorded` holds the same ids in draw
// order.
struct NodeSubset {
  std::vector<NodeId> members;
  std::vector<NodeId> order_recorded;
};

// Builds a NodeSubset from a draw sequence; rejects duplicates.
NodeSubset make_subset(std::vector<NodeId> recorded_order);

struct Cut {
  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;
  std::vector<EdgeId> crossing_edges;
};

// Subgraph induced by a node subset, with maps back to the parent graph.
// Node/edge ids in `graph` are dense; node_to_parent[i] is the parent id of
// subgraph node i, edge_to_parent[j] the parent id of subgraph edge j.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<NodeId> node_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, const NodeSubset& s);

// Connected components as sorted node lists, ordered by smallest member.
std::vector<std::vector<NodeId>> components(const WeightedGraph& g);
int component_count(const WeightedGraph& g);

// Cut defined by a proper, non-empty node set side_a.
Cut cut_from_partition(const WeightedGraph& g, std::span<const NodeId> side_a);

}  // namespace mstinfer
