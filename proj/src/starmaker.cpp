#include "treelink/starmaker.hpp"

#include <cmath>

namespace treelink {

UnitForest forest_from_stars(const SignedGraph& g,
                             const StarDecomposition& dec) {
  const NodeId n = g.node_count();
  UnitForest f;
  f.unit = dec.owner;
  f.parent.assign(n, -1);
  f.parent_edge.assign(n, -1);
  f.depth.assign(n, 0);
  f.roots.reserve(dec.stars.size());
  f.members.reserve(dec.stars.size());
  for (const Star& s : dec.stars) {
    f.roots.push_back(s.center);
    std::vector<NodeId> mem;
    mem.reserve(s.leaves.size() + 1);
    mem.push_back(s.center);
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
      NodeId leaf = s.leaves[i];
      f.parent[leaf] = s.center;
      f.parent_edge[leaf] = s.edges[i];
      f.depth[leaf] = 1;
      mem.push_back(leaf);
    }
    f.members.push_back(std::move(mem));
  }
  return f;
}

PredictionRecord run_starmaker(const SignedGraph& g, SignOracle& oracle) {
  require_connected(g, "starmaker");
  StarDecomposition dec = decompose_stars(g);

  UnitPredictOptions popts;
  popts.circuit_bound = 5;
  PredictionRecord rec =
      predict_with_units(g, oracle, forest_from_stars(g, dec), popts);

  const double nv = g.node_count();
  const double ne = g.edge_count();
  rec.density_precondition_met = ne >= 2.0 * nv - 2.0 + 2.0 * std::pow(nv, 1.5);
  rec.query_bound_ok =
      static_cast<double>(rec.partition.query_edges.size()) <=
      nv - 1.0 + std::pow(nv, 1.5) + 1e-9;
  return rec;
}

}  // namespace treelink
