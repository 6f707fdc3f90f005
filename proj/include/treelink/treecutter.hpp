#pragma once

#include <optional>

#include "treelink/graph.hpp"
#include "treelink/oracle.hpp"
#include "treelink/prediction.hpp"
#include "treelink/tree.hpp"
#include "treelink/treelet.hpp"
#include "treelink/unit_predictor.hpp"

namespace treelink {

struct LearnerOptions {
  NeighborOrder order = NeighborOrder::input;
  std::optional<NodeId> root;  // default: highest-degree node
};

/// Queries a breadth-first spanning tree and predicts every remaining edge
/// by its tree-path parity. Equivalent to the treelet learner with k at
/// least the tree height.
PredictionRecord run_spanning_tree(const SignedGraph& g, SignOracle& oracle,
                                   const LearnerOptions& opts, Rng& rng);

/// Splits a breadth-first spanning tree into treelets of height k, queries
/// the treelet edges plus one connector per adjacent treelet pair, and
/// predicts within and across treelets by parity. Circuits never exceed
/// 4k+1 edges; the query set stays below |V|-1 + |V|^2/(2k^2) + |V|/(2k).
PredictionRecord run_treecutter(const SignedGraph& g, SignOracle& oracle,
                                int k, const LearnerOptions& opts, Rng& rng);

/// Internal: unit forest whose units are the treelets of `dec`.
UnitForest forest_from_treelets(const RootedTree& tree,
                                const TreeletDecomposition& dec);

}  // namespace treelink
