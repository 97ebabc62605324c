#include "mstinfer/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mstinfer/rng.hpp"

namespace mstinfer {

EdgeOrdering::EdgeOrdering(std::vector<EdgeId> by_rank)
    : by_rank_(std::move(by_rank)) {
  rank_of_.assign(by_rank_.size(), 0);
  for (std::size_t k = 0; k < by_rank_.size(); ++k) {
    EdgeId e = by_rank_[k];
    if (e < 0 || static_cast<std::size_t>(e) >= by_rank_.size() ||
        rank_of_[static_cast<std::size_t>(e)] != 0)
      throw std::invalid_argument("ordering: not a permutation of edge ids");
    rank_of_[static_cast<std::size_t>(e)] = static_cast<int>(k) + 1;
  }
}

int EdgeOrdering::rank(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= rank_of_.size())
    throw std::out_of_range("ordering: unknown edge id");
  return rank_of_[static_cast<std::size_t>(e)];
}

EdgeOrdering weight_ordering(const WeightedGraph& g,
                             std::uint64_t tiebreak_seed) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).w < g.edge(b).w;
  });
  // Fisher-Yates within each run of bitwise-equal weights gives a uniform
  // permutation of the run regardless of its pre-shuffle order.
  Rng rng(tiebreak_seed);
  std::size_t lo = 0;
  while (lo < ids.size()) {
    std::size_t hi = lo + 1;
    while (hi < ids.size() && g.edge(ids[hi]).w == g.edge(ids[lo]).w) ++hi;
    if (hi - lo > 1)
      rng.shuffle_span(std::span<EdgeId>(ids.data() + lo, hi - lo));
    lo = hi;
  }
  return EdgeOrdering(std::move(ids));
}

EdgeOrdering restrict_ordering(const EdgeOrdering& parent,
                               std::span<const EdgeId> edge_to_parent) {
  std::vector<EdgeId> child_ids(edge_to_parent.size());
  std::iota(child_ids.begin(), child_ids.end(), 0);
  std::sort(child_ids.begin(), child_ids.end(), [&](EdgeId a, EdgeId b) {
    return parent.rank(edge_to_parent[static_cast<std::size_t>(a)]) <
           parent.rank(edge_to_parent[static_cast<std::size_t>(b)]);
  });
  return EdgeOrdering(std::move(child_ids));
}

}  // namespace mstinfer
