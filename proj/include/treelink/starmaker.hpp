#pragma once

#include "treelink/graph.hpp"
#include "treelink/oracle.hpp"
#include "treelink/prediction.hpp"
#include "treelink/stars.hpp"
#include "treelink/unit_predictor.hpp"

namespace treelink {

/// Covers the graph with maximum-degree stars, queries every star edge plus
/// one connector per adjacent star pair, and predicts through star centers.
/// Every circuit has length at most 5; the query set stays below
/// |V|-1 + |V|^(3/2). Fully deterministic.
PredictionRecord run_starmaker(const SignedGraph& g, SignOracle& oracle);

/// Internal: unit forest whose units are the stars of `dec`.
UnitForest forest_from_stars(const SignedGraph& g,
                             const StarDecomposition& dec);

}  // namespace treelink
