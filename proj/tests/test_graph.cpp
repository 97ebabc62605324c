#include "mstinfer/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mstinfer/rng.hpp"

using namespace mstinfer;

namespace {

WeightedGraph triangle() {
  GraphData d;
  d.node_count = 3;
  d.edges = {{0, 1, 0.5}, {0, 2, 1.0}, {1, 2, 1.5}};
  return WeightedGraph(std::move(d));
}

WeightedGraph random_graph(int n, double p, Rng& rng) {
  GraphData d;
  d.node_count = n;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) d.edges.push_back({u, v, rng.uniform_open01()});
  return WeightedGraph(std::move(d));
}

}  // namespace

TEST_CASE("construction validates edges") {
  GraphData ok;
  ok.node_count = 2;
  ok.edges = {{1, 0, 0.3}};  // reversed endpoints get canonicalized
  WeightedGraph g(std::move(ok));
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);

  auto bad = [](GraphData d) {
    CHECK_THROWS_AS(WeightedGraph(std::move(d)), std::invalid_argument);
  };
  GraphData d;
  d.node_count = 3;
  d.edges = {{0, 0, 1.0}};
  bad(d);  // self-loop
  d.edges = {{0, 1, 1.0}, {1, 0, 2.0}};
  bad(d);  // parallel edge after canonicalization
  d.edges = {{0, 1, 0.0}};
  bad(d);  // zero weight
  d.edges = {{0, 1, -1.0}};
  bad(d);  // negative weight
  d.edges = {{0, 3, 1.0}};
  bad(d);  // endpoint out of range
  d.edges = {{0, 1, 1.0}};
  d.coords = {{0.0, 0.0}};
  bad(d);  // coords must cover every node or none
}

TEST_CASE("degree and strength sum to twice the edge totals") {
  WeightedGraph g = triangle();
  CHECK(g.strength(0) == doctest::Approx(1.5));
  CHECK(g.strength(1) == doctest::Approx(2.0));
  CHECK(g.strength(2) == doctest::Approx(2.5));
  CHECK(g.degree(0) == 2);
  CHECK_THROWS_AS(g.degree(3), std::out_of_range);
  CHECK_THROWS_AS(g.strength(-1), std::out_of_range);

  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedGraph r = random_graph(2 + static_cast<int>(rng.next_below(40)),
                                   rng.uniform01(), rng);
    double strength_sum = 0.0;
    long long degree_sum = 0;
    for (NodeId v = 0; v < r.node_count(); ++v) {
      strength_sum += r.strength(v);
      degree_sum += r.degree(v);
    }
    CHECK(strength_sum == doctest::Approx(2.0 * r.total_weight()));
    CHECK(degree_sum == 2LL * r.edge_count());
  }
}

TEST_CASE("isolated vertices have zero degree and strength") {
  GraphData d;
  d.node_count = 4;
  d.edges = {{0, 1, 0.7}};
  WeightedGraph g(std::move(d));
  CHECK(g.degree(2) == 0);
  CHECK(g.strength(3) == 0.0);
  CHECK_FALSE(g.is_complete());
  CHECK(triangle().is_complete());
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
  WeightedGraph g = triangle();
  InducedSubgraph sub = induced_subgraph(g, make_subset({0, 1}));
  REQUIRE(sub.graph.node_count() == 2);
  REQUIRE(sub.graph.edge_count() == 1);
  CHECK(sub.graph.edge(0).w == 0.5);
  CHECK(sub.edge_to_parent == std::vector<EdgeId>{0});
  CHECK(sub.node_to_parent == std::vector<NodeId>{0, 1});

  // Full subset reproduces the graph.
  InducedSubgraph full = induced_subgraph(g, make_subset({0, 1, 2}));
  CHECK(full.graph.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(full.graph.edge(e).u == g.edge(e).u);
    CHECK(full.graph.edge(e).v == g.edge(e).v);
    CHECK(full.graph.edge(e).w == g.edge(e).w);
  }

  // Path 0-1-2-3-4 restricted to every other node has no edges.
  GraphData pd;
  pd.node_count = 5;
  pd.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}};
  WeightedGraph path(std::move(pd));
  InducedSubgraph alt = induced_subgraph(path, make_subset({0, 2, 4}));
  CHECK(alt.graph.node_count() == 3);
  CHECK(alt.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(g, make_subset({0, 7})),
                  std::invalid_argument);
}

TEST_CASE("induced subgraph matches a brute-force edge filter") {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(49));
    WeightedGraph g = random_graph(n, 0.3 + 0.6 * rng.uniform01(), rng);
    std::vector<NodeId> picked;
    for (NodeId v = 0; v < n; ++v)
      if (rng.uniform01() < 0.5) picked.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, make_subset(picked));

    std::set<NodeId> inside(picked.begin(), picked.end());
    std::vector<EdgeId> expected;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (inside.count(g.edge(e).u) && inside.count(g.edge(e).v))
        expected.push_back(e);
    REQUIRE(sub.edge_to_parent == expected);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
      const Edge& ce = sub.graph.edge(e);
      const Edge& pe = g.edge(sub.edge_to_parent[static_cast<std::size_t>(e)]);
      CHECK(sub.node_to_parent[static_cast<std::size_t>(ce.u)] == pe.u);
      CHECK(sub.node_to_parent[static_cast<std::size_t>(ce.v)] == pe.v);
      CHECK(ce.w == pe.w);
    }
  }
}

TEST_CASE("induced subgraph carries node attributes") {
  GraphData d;
  d.node_count = 3;
  d.edges = {{0, 1, 1.0}, {1, 2, 2.0}};
  d.coords = {{0.0, 1.0}, {2.0, 3.0}, {4.0, 5.0}};
  d.regions = {"a", "b", "c"};
  d.names = {"n0", "n1", "n2"};
  WeightedGraph g(std::move(d));
  InducedSubgraph sub = induced_subgraph(g, make_subset({0, 2}));
  CHECK(sub.graph.coord(0) == std::array<double, 2>{0.0, 1.0});
  CHECK(sub.graph.coord(1) == std::array<double, 2>{4.0, 5.0});
  CHECK(sub.graph.region(1) == "c");
  CHECK(sub.graph.name(0) == "n0");
}

TEST_CASE("components agree with a union-find oracle") {
  GraphData d;
  d.node_count = 6;
  d.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 2.0}};
  WeightedGraph two(std::move(d));
  auto blocks = components(two);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(blocks[1] == std::vector<NodeId>{3, 4, 5});

  GraphData iso;
  iso.node_count = 4;
  WeightedGraph isolated(std::move(iso));
  CHECK(component_count(isolated) == 4);

  Rng rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(40));
    WeightedGraph g = random_graph(n, rng.uniform01() * 0.2, rng);
    // Oracle: plain union-find over the edge list.
    std::vector<NodeId> parent(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](NodeId x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int merges = 0;
    for (const Edge& e : g.edges()) {
      NodeId a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++merges;
      }
    }
    CHECK(component_count(g) == n - merges);
  }
}

TEST_CASE("cut_from_partition finds exactly the crossing edges") {
  WeightedGraph g = triangle();
  Cut cut = cut_from_partition(g, std::vector<NodeId>{0});
  CHECK(cut.side_a == std::vector<NodeId>{0});
  CHECK(cut.side_b == std::vector<NodeId>{1, 2});
  CHECK(cut.crossing_edges == std::vector<EdgeId>{0, 1});

  GraphData pd;
  pd.node_count = 3;
  pd.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
  WeightedGraph path(std::move(pd));
  Cut mid = cut_from_partition(path, std::vector<NodeId>{0, 1});
  CHECK(mid.crossing_edges == std::vector<EdgeId>{1});

  GraphData dd;
  dd.node_count = 6;
  dd.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
              {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
  WeightedGraph disjoint(std::move(dd));
  Cut none = cut_from_partition(disjoint, std::vector<NodeId>{0, 1, 2});
  CHECK(none.crossing_edges.empty());

  CHECK_THROWS_AS(cut_from_partition(g, std::vector<NodeId>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cut_from_partition(g, std::vector<NodeId>{0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("make_subset records draw order and rejects duplicates") {
  NodeSubset s = make_subset({3, 1, 2});
  CHECK(s.members == std::vector<NodeId>{1, 2, 3});
  CHECK(s.order_recorded == std::vector<NodeId>{3, 1, 2});
  CHECK_THROWS_AS(make_subset({1, 1}), std::invalid_argument);
}
