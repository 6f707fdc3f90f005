#pragma once

#include <span>
#include <vector>

#include "treelink/graph.hpp"
#include "treelink/oracle.hpp"
#include "treelink/prediction.hpp"
#include "treelink/treecutter.hpp"
#include "treelink/treelet.hpp"

namespace treelink {

/// Quotient graph over a treelet decomposition: one node per treelet, one
/// edge per treelet pair joined by at least one host edge, with the first
/// host edge seen (in edge-id order) kept as that pair's witness.
class ContractionGraph {
 public:
  ContractionGraph() = default;
  ContractionGraph(NodeId node_count, std::vector<Edge> edges,
                   std::vector<EdgeId> witness);

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  EdgeId witness(EdgeId e) const { return witness_[e]; }
  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> witness_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

ContractionGraph build_contraction_graph(const SignedGraph& g,
                                         const TreeletDecomposition& dec);

/// Treelet decomposition, then a star decomposition of the contraction
/// graph. Each star of treelets is stitched into one unit tree through its
/// queried witness edges, so parity queries stay constant-time. Circuits
/// never exceed 12k+5; the query set stays below
/// |V|-1 + ((|V|-1)/k + 1)^(3/2).
PredictionRecord run_treeletstar(const SignedGraph& g, SignOracle& oracle,
                                 int k, const LearnerOptions& opts, Rng& rng);

}  // namespace treelink
