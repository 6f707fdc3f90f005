#include "treelink/treeletstar.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "treelink/stars.hpp"
#include "treelink/unit_predictor.hpp"

namespace treelink {

ContractionGraph::ContractionGraph(NodeId node_count, std::vector<Edge> edges,
                                   std::vector<EdgeId> witness)
    : node_count_(node_count),
      edges_(std::move(edges)),
      witness_(std::move(witness)) {
  offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (NodeId v = 0; v < node_count_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(edges_.size() * 2);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    adjacency_[cursor[edges_[e].u]++] = Neighbor{edges_[e].v, e};
    adjacency_[cursor[edges_[e].v]++] = Neighbor{edges_[e].u, e};
  }
}

ContractionGraph build_contraction_graph(const SignedGraph& g,
                                         const TreeletDecomposition& dec) {
  std::vector<Edge> edges;
  std::vector<EdgeId> witness;
  std::unordered_map<std::uint64_t, EdgeId> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::int32_t a = dec.owner[g.edge(e).u];
    std::int32_t b = dec.owner[g.edge(e).v];
    if (a == b) continue;
    if (seen.emplace(unit_pair_key(a, b), e).second) {
      edges.push_back(Edge{std::min(a, b), std::max(a, b)});
      witness.push_back(e);
    }
  }
  return ContractionGraph(static_cast<NodeId>(dec.size()), std::move(edges),
                          std::move(witness));
}

namespace {

// Stitches each star of treelets into one rooted unit tree: the center
// treelet keeps its root; every leaf treelet hangs off the center through
// its witness edge and is re-rooted at the witness endpoint.
UnitForest forest_from_treelet_stars(const SignedGraph& g,
                                     const RootedTree& tree,
                                     const TreeletDecomposition& dec,
                                     const ContractionGraph& cg,
                                     const StarDecomposition& sdec) {
  const NodeId n = g.node_count();
  UnitForest f;
  f.unit.resize(n);
  for (NodeId v = 0; v < n; ++v) f.unit[v] = sdec.owner[dec.owner[v]];
  f.parent.assign(n, -1);
  f.parent_edge.assign(n, -1);
  f.depth.assign(n, -1);

  // Witness attachments per node, present only inside a star.
  std::vector<std::vector<Neighbor>> attach(n);
  for (const Star& s : sdec.stars) {
    for (EdgeId ce : s.edges) {
      EdgeId w = cg.witness(ce);
      const Edge& we = g.edge(w);
      attach[we.u].push_back(Neighbor{we.v, w});
      attach[we.v].push_back(Neighbor{we.u, w});
    }
  }

  f.roots.reserve(sdec.stars.size());
  f.members.reserve(sdec.stars.size());
  for (const Star& s : sdec.stars) {
    NodeId root = dec.roots[s.center];
    f.roots.push_back(root);
    std::vector<NodeId> mem;
    std::queue<NodeId> q;
    q.push(root);
    f.depth[root] = 0;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      mem.push_back(x);
      auto visit = [&](NodeId y, EdgeId via) {
        if (f.depth[y] >= 0) return;
        f.depth[y] = f.depth[x] + 1;
        f.parent[y] = x;
        f.parent_edge[y] = via;
        q.push(y);
      };
      // Within-treelet tree edges first, then witness hops.
      if (NodeId p = tree.parent[x];
          p >= 0 && dec.owner[p] == dec.owner[x] && dec.local_depth[x] > 0)
        visit(p, tree.parent_edge[x]);
      for (NodeId c : tree.children[x])
        if (dec.owner[c] == dec.owner[x] && dec.local_depth[c] > 0)
          visit(c, tree.parent_edge[c]);
      for (const Neighbor& nb : attach[x]) visit(nb.node, nb.edge);
    }
    f.members.push_back(std::move(mem));
  }
  return f;
}

}  // namespace

PredictionRecord run_treeletstar(const SignedGraph& g, SignOracle& oracle,
                                 int k, const LearnerOptions& opts, Rng& rng) {
  if (k < 2) throw std::invalid_argument("treeletstar: k must be >= 2");
  require_connected(g, "treeletstar");
  NodeId root = opts.root.value_or(default_root(g));
  RootedTree tree = bfs_spanning_tree(g, root, opts.order, rng);
  TreeletDecomposition dec = decompose(tree, k);
  ContractionGraph cg = build_contraction_graph(g, dec);
  StarDecomposition sdec = decompose_stars(cg);

  UnitPredictOptions popts;
  popts.circuit_bound =
      dec.size() == 1 ? std::max(2, 2 * dec.heights[0]) : 12 * k + 5;
  PredictionRecord rec = predict_with_units(
      g, oracle, forest_from_treelet_stars(g, tree, dec, cg, sdec), popts);

  const double nv = g.node_count();
  const double ne = g.edge_count();
  const double contracted = (nv - 1.0) / k + 1.0;
  rec.density_precondition_met =
      ne >= 2.0 * nv - 2.0 + 2.0 * std::pow(contracted, 1.5);
  rec.query_bound_ok =
      static_cast<double>(rec.partition.query_edges.size()) <=
      nv - 1.0 + std::pow(contracted, 1.5) + 1e-9;
  return rec;
}

}  // namespace treelink
