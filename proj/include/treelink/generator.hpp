#pragma once

#include <cstdint>

#include "treelink/graph.hpp"
#include "treelink/labeling.hpp"
#include "treelink/types.hpp"

namespace treelink {

struct GeneratorSpec {
  NodeId nodes = 0;
  EdgeId target_edges = 0;
  double cluster_split = 0.5;             // fraction of nodes on side 0
  double negative_fraction_target = 0.0;  // of edges, within +/-2pp
  std::uint64_t seed = 1;
};

struct GeneratedGraph {
  SignedGraph graph;  // carries the consistent labels
  TwoClustering clustering;
  EdgeId pruned_edges = 0;
  double achieved_negative_fraction = 0.0;
};

/// Random connected graph with a planted two-clustering: random spanning
/// tree plus uniform extra pairs, then positive (within-cluster) edges
/// pruned uniformly — never breaking connectivity — until the negative
/// fraction lands within two percentage points of the target. Throws,
/// naming the achieved fraction, when the target is unreachable.
GeneratedGraph generate_planted_graph(const GeneratorSpec& spec);

}  // namespace treelink
