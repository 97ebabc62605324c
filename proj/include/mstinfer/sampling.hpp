#pragma once

#include <cstdint>
#include <vector>

#include "mstinfer/graph.hpp"

namespace mstinfer {

enum class SamplingKind { Uniform, Near, Far, RandomWalk, Quadrant };

enum class Quadrant { I, II, III, IV };

// Closeness score used when walking: the neighbor's total incident weight, or
// the weight of the connecting edge. Both are transformed so that smaller
// scores are favored.
enum class WalkScore { Strength, EdgeWeight };

struct SampleDesign {
  SamplingKind kind = SamplingKind::Uniform;
  int n = 0;                        // ignored by Quadrant
  std::vector<Quadrant> quadrants;  // Quadrant only; must be non-empty
  WalkScore walk_score = WalkScore::Strength;
  std::uint64_t seed = 0;
};

// Dispatches on design.kind. All strategies draw n distinct nodes (Quadrant
// instead takes every node whose coordinates fall in the region) and are
// deterministic per seed.
NodeSubset sample(const WeightedGraph& g, const SampleDesign& design);

NodeSubset sample_uniform(const WeightedGraph& g, const SampleDesign& design);

// Inclusion odds favor nodes close to the rest: on complete graphs
// max(s) - s_i + min(s) over total incident weights s, otherwise degree
// (plus 1 when some node is isolated).
NodeSubset sample_near(const WeightedGraph& g, const SampleDesign& design);

// Inclusion odds favor peripheral nodes: s_i on complete graphs, otherwise
// max(d) - d_i + max(1, min(d)).
NodeSubset sample_far(const WeightedGraph& g, const SampleDesign& design);

// Walk that records each newly visited node: start uniform among unrecorded
// nodes, step to neighbors with closeness-transformed odds, restart whenever
// the current node is isolated or the chosen neighbor was already recorded.
NodeSubset sample_random_walk(const WeightedGraph& g,
                              const SampleDesign& design);

// Every node whose coordinates lie in the union of the requested quadrants
// (closed boundaries). Requires coordinates on the graph.
NodeSubset sample_quadrant(const WeightedGraph& g, const SampleDesign& design);

// Unnormalized inclusion odds backing sample_near / sample_far.
std::vector<double> near_weights(const WeightedGraph& g);
std::vector<double> far_weights(const WeightedGraph& g);

// Transformed odds of stepping to each neighbor of `current`, in adjacency
// order.
std::vector<double> walk_neighbor_weights(const WeightedGraph& g,
                                          NodeId current, WalkScore score);

// Membership test behind sample_quadrant (boundaries included).
bool in_quadrant_union(const std::vector<Quadrant>& quadrants, double x,
                       double y);

}  // namespace mstinfer
