#include "mstinfer/ordering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mstinfer/rng.hpp"

using namespace mstinfer;

namespace {

WeightedGraph graph_with_weights(int n, std::vector<Edge> edges) {
  GraphData d;
  d.node_count = n;
  d.edges = std::move(edges);
  return WeightedGraph(std::move(d));
}

}  // namespace

TEST_CASE("ordering constructor requires a permutation") {
  CHECK_THROWS_AS(EdgeOrdering({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeOrdering({1, 2}), std::invalid_argument);
  EdgeOrdering ord({2, 0, 1});
  CHECK(ord.rank(2) == 1);
  CHECK(ord.rank(0) == 2);
  CHECK(ord.rank(1) == 3);
  CHECK_THROWS_AS(ord.rank(3), std::out_of_range);
}

TEST_CASE("unique weights make the ordering seed-independent") {
  WeightedGraph g = graph_with_weights(
      4, {{0, 1, 0.4}, {0, 2, 0.1}, {1, 2, 0.9}, {2, 3, 0.3}});
  EdgeOrdering a = weight_ordering(g, 1);
  EdgeOrdering b = weight_ordering(g, 999);
  CHECK(std::ranges::equal(a.by_rank(), b.by_rank()));
  // Strictly ascending weights along ranks.
  for (std::size_t k = 1; k < a.by_rank().size(); ++k)
    CHECK(g.edge(a.by_rank()[k - 1]).w < g.edge(a.by_rank()[k]).w);
  CHECK(a.rank(1) == 1);  // 0.1 < 0.3 < 0.4 < 0.9
  CHECK(a.rank(0) == 3);
  CHECK(a.rank(2) == 4);
}

TEST_CASE("single-edge graph gets rank one") {
  WeightedGraph g = graph_with_weights(2, {{0, 1, 0.5}});
  CHECK(weight_ordering(g, 0).rank(0) == 1);
}

TEST_CASE("weight ordering is weight-consistent on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    GraphData d;
    int n = 3 + static_cast<int>(rng.next_below(20));
    d.node_count = n;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.uniform01() < 0.5)
          // Small pool forces plenty of ties.
          d.edges.push_back(
              {u, v, 0.25 * (1.0 + static_cast<double>(rng.next_below(4)))});
    WeightedGraph g(std::move(d));
    EdgeOrdering ord = weight_ordering(g, rng.next_u64());
    for (std::size_t k = 1; k < ord.by_rank().size(); ++k)
      CHECK(g.edge(ord.by_rank()[k - 1]).w <= g.edge(ord.by_rank()[k]).w);
    // Ranks are exactly 1..m.
    std::vector<int> ranks;
    for (EdgeId e = 0; e < g.edge_count(); ++e) ranks.push_back(ord.rank(e));
    std::sort(ranks.begin(), ranks.end());
    std::vector<int> expect(static_cast<std::size_t>(g.edge_count()));
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(ranks == expect);
  }
}

TEST_CASE("same seed gives the same ordering") {
  WeightedGraph g = graph_with_weights(
      4, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}});
  CHECK(std::ranges::equal(weight_ordering(g, 77).by_rank(),
                           weight_ordering(g, 77).by_rank()));
}

TEST_CASE("tied edges get a uniform random permutation over seeds") {
  // Three equal-weight edges: all 6 within-group orders equally likely.
  WeightedGraph g = graph_with_weights(
      3, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}});
  const int trials = 60000;
  std::map<std::vector<EdgeId>, int> freq;
  for (int t = 0; t < trials; ++t) {
    EdgeOrdering ord =
        weight_ordering(g, derive_seed(123, static_cast<std::uint64_t>(t)));
    ++freq[std::vector<EdgeId>(ord.by_rank().begin(), ord.by_rank().end())];
  }
  REQUIRE(freq.size() == 6);
  double p = 1.0 / 6.0;
  double tol = 3.0 * std::sqrt(p * (1 - p) / trials);
  for (const auto& [perm, count] : freq)
    CHECK(std::abs(static_cast<double>(count) / trials - p) < tol);
}

TEST_CASE("restricted ordering preserves relative ranks") {
  WeightedGraph g = graph_with_weights(
      4, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}});
  EdgeOrdering parent = weight_ordering(g, 5);
  // Restrict to parent edges 1 and 3.
  std::vector<EdgeId> edge_to_parent{1, 3};
  EdgeOrdering child = restrict_ordering(parent, edge_to_parent);
  REQUIRE(child.edge_count() == 2);
  bool parent_first = parent.rank(1) < parent.rank(3);
  CHECK((child.rank(0) < child.rank(1)) == parent_first);

  EdgeOrdering empty = restrict_ordering(parent, std::vector<EdgeId>{});
  CHECK(empty.edge_count() == 0);
}
