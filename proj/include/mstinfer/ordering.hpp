#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mstinfer/graph.hpp"

namespace mstinfer {

// Strict total order over a graph's edges. rank() is 1-based: the edge with
// rank 1 is considered first by the spanning-forest builder, so an ordering
// acts as a set of effective weights that breaks every tie.
class EdgeOrdering {
 public:
  EdgeOrdering() = default;
  // by_rank[k] is the edge with rank k+1; must be a permutation of 0..m-1.
  explicit EdgeOrdering(std::vector<EdgeId> by_rank);

  int rank(EdgeId e) const;
  std::span<const EdgeId> by_rank() const { return by_rank_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(by_rank_.size()); }

 private:
  std::vector<EdgeId> by_rank_;
  std::vector<int> rank_of_;
};

// Weight-consistent ordering: strictly lighter edges always rank earlier, and
// each group of equal-weight edges (bitwise-equal doubles) is permuted
// uniformly at random by tiebreak_seed. Unique weights make the result
// seed-independent.
EdgeOrdering weight_ordering(const WeightedGraph& g,
                             std::uint64_t tiebreak_seed);

// Ordering induced on a subgraph: subgraph edges keep the relative order of
// their parent edges. edge_to_parent comes from induced_subgraph().
EdgeOrdering restrict_ordering(const EdgeOrdering& parent,
                               std::span<const EdgeId> edge_to_parent);

}  // namespace mstinfer
