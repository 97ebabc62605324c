#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "mstinfer/graph.hpp"
#include "mstinfer/ordering.hpp"

namespace mstinfer {

// Spanning forest of a host graph, held as sorted edge ids. The host graph is
// passed explicitly to every function that needs weights or topology.
struct Forest {
  std::vector<EdgeId> edges;
  auto operator<=>(const Forest&) const = default;
};

// Raised when an exhaustive routine is asked to exceed its size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimum spanning forest under the given edge ordering (Kruskal). The
// ordering is a strict total order, so the result is unique: |edges| = n - K
// with K the number of connected components.
Forest msf(const WeightedGraph& g, const EdgeOrdering& ordering);

// Total weight, summed in ascending weight order so that forests with equal
// weight multisets produce bit-identical doubles.
double forest_weight(const WeightedGraph& g, const Forest& f);

// True when f is acyclic and spans every component of g.
bool is_spanning_forest(const WeightedGraph& g, const Forest& f);

// All minimum spanning forests, found by exhaustive subset enumeration.
// Sorted lexicographically. Throws SizeLimitError above max_edges edges.
std::vector<Forest> enumerate_msts(const WeightedGraph& g, int max_edges = 16);

// Runs msf() under every weight-consistent edge ordering and counts how many
// orderings produce each forest. The number of orderings is the product of
// k! over equal-weight groups; throws SizeLimitError when it would exceed
// max_orderings.
std::map<Forest, std::uint64_t> count_orderings_per_mst(
    const WeightedGraph& g, std::uint64_t max_orderings = 1000000);

// True when some cycle through e has e as its unique highest-ranked edge,
// i.e. a path between e's endpoints avoids e using only lower ranks.
// Equivalent to e not belonging to the forest msf(g, ordering), but computed
// independently of Kruskal (minimax path search).
bool check_cycle_property(const WeightedGraph& g, const EdgeOrdering& ordering,
                          EdgeId e);

// True when e is the unique lowest-ranked edge across some cut of g.
// Equivalent to e belonging to msf(g, ordering); computed independently via
// reachability over lower-ranked edges.
bool check_cut_property(const WeightedGraph& g, const EdgeOrdering& ordering,
                        EdgeId e);

// Negative-predictive-value check: no edge of the population forest that
// appears among the sampled edges may be missing from the sample forest.
// All ids live in the population graph's edge space; sample_msf must be a
// subset of sample_edges.
bool verify_npv(const Forest& population_msf,
                std::span<const EdgeId> sample_edges,
                const Forest& sample_msf);

struct EdgeSwap {
  EdgeId removed = 0;
  EdgeId added = 0;
};

// Transforms one minimum spanning forest into another by single-edge swaps of
// equal weight; every intermediate forest is again minimal. Inputs must both
// be minimum spanning forests of g (otherwise std::invalid_argument).
std::vector<EdgeSwap> exchange_witness(const Forest& from, const Forest& to,
                                       const WeightedGraph& g);

}  // namespace mstinfer
