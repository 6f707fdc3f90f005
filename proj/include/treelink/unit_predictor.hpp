#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "treelink/graph.hpp"
#include "treelink/oracle.hpp"
#include "treelink/prediction.hpp"
#include "treelink/types.hpp"

namespace treelink {

/// Node-disjoint rooted trees covering all nodes, each tree a subgraph of
/// the host graph. Every learner reduces to one of these: the spanning tree
/// itself, the treelets of a spanning tree, the stars, or the
/// stars-of-treelets stitched together by their witness edges.
///
/// members[i] lists unit i's nodes in preorder (every node after its
/// parent); members[i][0] == roots[i].
struct UnitForest {
  std::vector<std::int32_t> unit;   // node -> unit index
  std::vector<NodeId> parent;       // within-unit parent, -1 at unit roots
  std::vector<EdgeId> parent_edge;  // host edge to parent, -1 at unit roots
  std::vector<int> depth;           // within-unit depth
  std::vector<NodeId> roots;
  std::vector<std::vector<NodeId>> members;

  int unit_count() const { return static_cast<int>(roots.size()); }
};

/// Throws if the forest violates its structural invariants (tests use this).
void validate_unit_forest(const SignedGraph& g, const UnitForest& f);

constexpr std::uint64_t unit_pair_key(std::int32_t a, std::int32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

/// Output of the connector-selection pass: every edge classified, plus the
/// single queried edge per connected unit pair.
struct ConnectorSelection {
  std::vector<EdgeRole> role;
  std::unordered_map<std::uint64_t, EdgeId> connector;
};

/// One pass over each unit's outgoing edges with a unit-indexed slot vector:
/// the first edge seen towards each other unit becomes that pair's queried
/// connector, later ones become test edges. `role` arrives with the
/// backbone (within-unit tree) edges premarked and everything else
/// unassigned.
ConnectorSelection select_connectors(const SignedGraph& g,
                                     const UnitForest& forest,
                                     std::vector<EdgeRole> role);

int unit_distance(const UnitForest& f, NodeId u, NodeId v);
std::vector<EdgeId> unit_path_edges(const UnitForest& f, NodeId u, NodeId v);

struct UnitPredictOptions {
  /// Structural cap on every circuit length; exceeding it is an internal
  /// error and throws.
  std::optional<int> circuit_bound;
};

/// The full query-then-predict pipeline over a unit forest:
///   1. query all within-unit tree edges and one connector per unit pair,
///   2. seal the oracle,
///   3. tag each unit's nodes with parity labels,
///   4. predict every remaining edge in constant time from the tags.
PredictionRecord predict_with_units(const SignedGraph& g, SignOracle& oracle,
                                    UnitForest forest,
                                    const UnitPredictOptions& opts = {});

}  // namespace treelink
