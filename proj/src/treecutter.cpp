#include "treelink/treecutter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treelink {

UnitForest forest_from_treelets(const RootedTree& tree,
                                const TreeletDecomposition& dec) {
  const auto n = static_cast<NodeId>(tree.member.size());
  UnitForest f;
  f.unit = dec.owner;
  f.parent.assign(n, -1);
  f.parent_edge.assign(n, -1);
  f.depth = dec.local_depth;
  f.roots = dec.roots;
  f.members = dec.members;
  for (NodeId v = 0; v < n; ++v) {
    if (dec.local_depth[v] > 0) {
      f.parent[v] = tree.parent[v];
      f.parent_edge[v] = tree.parent_edge[v];
    }
  }
  return f;
}

namespace {

PredictionRecord run_treelet_partition(const SignedGraph& g,
                                       SignOracle& oracle, int k,
                                       const LearnerOptions& opts, Rng& rng) {
  require_connected(g, "treecutter");
  NodeId root = opts.root.value_or(default_root(g));
  RootedTree tree = bfs_spanning_tree(g, root, opts.order, rng);
  TreeletDecomposition dec = decompose(tree, k);

  UnitPredictOptions popts;
  popts.circuit_bound =
      dec.size() == 1 ? std::max(2, 2 * dec.heights[0]) : 4 * k + 1;
  PredictionRecord rec =
      predict_with_units(g, oracle, forest_from_treelets(tree, dec), popts);

  const double nv = g.node_count();
  const double ne = g.edge_count();
  rec.density_precondition_met =
      ne >= 2.0 * nv - 2.0 + nv * nv / (double(k) * k) + nv / k;
  rec.query_bound_ok =
      static_cast<double>(rec.partition.query_edges.size()) <=
      nv - 1.0 + nv * nv / (2.0 * k * k) + nv / (2.0 * k) + 1e-9;
  return rec;
}

}  // namespace

PredictionRecord run_spanning_tree(const SignedGraph& g, SignOracle& oracle,
                                   const LearnerOptions& opts, Rng& rng) {
  require_connected(g, "spanning-tree-only");
  NodeId root = opts.root.value_or(default_root(g));
  RootedTree tree = bfs_spanning_tree(g, root, opts.order, rng);
  // k at least the tree height collapses the decomposition to one treelet.
  int k = std::max(2, tree_height(tree));
  TreeletDecomposition dec = decompose(tree, k);
  if (dec.size() != 1)
    throw std::logic_error("spanning-tree-only: expected a single treelet");

  UnitPredictOptions popts;
  popts.circuit_bound = std::max(2, 2 * dec.heights[0]);
  PredictionRecord rec =
      predict_with_units(g, oracle, forest_from_treelets(tree, dec), popts);
  rec.density_precondition_met = true;
  rec.query_bound_ok =
      rec.partition.query_edges.size() ==
      static_cast<std::size_t>(g.node_count()) - 1;
  return rec;
}

PredictionRecord run_treecutter(const SignedGraph& g, SignOracle& oracle,
                                int k, const LearnerOptions& opts, Rng& rng) {
  if (k < 2) throw std::invalid_argument("treecutter: k must be >= 2");
  return run_treelet_partition(g, oracle, k, opts, rng);
}

}  // namespace treelink
