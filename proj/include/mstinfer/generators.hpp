#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mstinfer/graph.hpp"
#include "mstinfer/rng.hpp"

namespace mstinfer {

enum class GraphKind { Complete, Gnp, Normal, BarabasiAlbert };

struct GeneratorConfig {
  GraphKind kind = GraphKind::Complete;
  int node_count = 0;
  double p = 0.5;     // Gnp edge-keep probability
  int m_attach = 3;   // BarabasiAlbert edges per arriving node
  std::uint64_t seed = 0;
};

// Dispatches on kind; same config always yields the bitwise-same graph.
WeightedGraph generate(const GeneratorConfig& cfg);

// Complete graph on n nodes, weights i.i.d. uniform on (0, 1).
WeightedGraph gen_complete(int n, std::uint64_t seed);

// Complete graph thinned edge-by-edge with keep probability p.
WeightedGraph gen_gnp(int n, double p, std::uint64_t seed);

// Nodes at i.i.d. standard bivariate normal positions, complete graph with
// Euclidean distances as weights. Coordinates are stored on the graph.
WeightedGraph gen_normal(int n, std::uint64_t seed);

// Preferential attachment: clique seed on m_attach nodes, then each arriving
// node attaches to m_attach distinct nodes chosen with probability
// proportional to degree at its arrival. Edge weights uniform on (0, 1).
WeightedGraph gen_barabasi_albert(int n, int m_attach, std::uint64_t seed);

// Pieces of gen_normal, exposed so the geometry and the wiring can be
// exercised separately.
std::vector<std::array<double, 2>> sample_normal_coords(int n, Rng& rng);
WeightedGraph normal_graph_from_coords(
    std::vector<std::array<double, 2>> coords);

}  // namespace mstinfer
