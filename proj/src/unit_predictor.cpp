#include "treelink/unit_predictor.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace treelink {

void validate_unit_forest(const SignedGraph& g, const UnitForest& f) {
  const auto n = static_cast<std::size_t>(g.node_count());
  if (f.unit.size() != n || f.parent.size() != n ||
      f.parent_edge.size() != n || f.depth.size() != n)
    throw std::logic_error("unit forest: array sizes do not match graph");
  std::vector<char> seen(n, 0);
  for (int u = 0; u < f.unit_count(); ++u) {
    if (f.members[u].empty() || f.members[u].front() != f.roots[u])
      throw std::logic_error("unit forest: members must start at the root");
    for (std::size_t i = 0; i < f.members[u].size(); ++i) {
      NodeId x = f.members[u][i];
      if (f.unit[x] != u) throw std::logic_error("unit forest: owner mismatch");
      if (seen[x]) throw std::logic_error("unit forest: node in two units");
      seen[x] = 1;
      if (i == 0) {
        if (f.parent[x] != -1 || f.depth[x] != 0)
          throw std::logic_error("unit forest: bad root record");
        continue;
      }
      NodeId p = f.parent[x];
      if (p < 0 || f.unit[p] != u || !seen[p])
        throw std::logic_error("unit forest: members are not in preorder");
      if (f.depth[x] != f.depth[p] + 1)
        throw std::logic_error("unit forest: bad depth");
      const Edge& ed = g.edge(f.parent_edge[x]);
      if (!((ed.u == x && ed.v == p) || (ed.u == p && ed.v == x)))
        throw std::logic_error("unit forest: parent edge mismatch");
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw std::logic_error("unit forest: node not covered");
}

ConnectorSelection select_connectors(const SignedGraph& g,
                                     const UnitForest& forest,
                                     std::vector<EdgeRole> role) {
  ConnectorSelection sel;
  std::vector<EdgeId> slot(forest.unit_count(), -1);
  std::vector<std::int32_t> touched;
  for (int a = 0; a < forest.unit_count(); ++a) {
    for (NodeId i : forest.members[a]) {
      for (const Neighbor& nb : g.neighbors(i)) {
        if (role[nb.edge] != EdgeRole::unassigned) continue;
        std::int32_t b = forest.unit[nb.node];
        if (b == a) {
          role[nb.edge] = EdgeRole::within_test;
        } else if (slot[b] == -1) {
          slot[b] = nb.edge;
          role[nb.edge] = EdgeRole::connector_query;
          sel.connector.emplace(unit_pair_key(a, b), nb.edge);
          touched.push_back(b);
        } else {
          role[nb.edge] = EdgeRole::cross_test;
        }
      }
    }
    for (std::int32_t b : touched) slot[b] = -1;
    touched.clear();
  }
  sel.role = std::move(role);
  return sel;
}

int unit_distance(const UnitForest& f, NodeId u, NodeId v) {
  int d = 0;
  while (f.depth[u] > f.depth[v]) u = f.parent[u], ++d;
  while (f.depth[v] > f.depth[u]) v = f.parent[v], ++d;
  while (u != v) u = f.parent[u], v = f.parent[v], d += 2;
  return d;
}

std::vector<EdgeId> unit_path_edges(const UnitForest& f, NodeId u, NodeId v) {
  std::vector<EdgeId> up, down;
  while (f.depth[u] > f.depth[v]) {
    up.push_back(f.parent_edge[u]);
    u = f.parent[u];
  }
  while (f.depth[v] > f.depth[u]) {
    down.push_back(f.parent_edge[v]);
    v = f.parent[v];
  }
  while (u != v) {
    up.push_back(f.parent_edge[u]);
    down.push_back(f.parent_edge[v]);
    u = f.parent[u];
    v = f.parent[v];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

namespace {

class UnitCircuits final : public CircuitModel {
 public:
  UnitCircuits(const SignedGraph& g, std::shared_ptr<const UnitForest> forest,
               std::unordered_map<std::uint64_t, EdgeId> connector,
               std::vector<EdgeRole> role)
      : graph_(&g),
        forest_(std::move(forest)),
        connector_(std::move(connector)),
        role_(std::move(role)) {}

  std::vector<EdgeId> circuit_edges(EdgeId e) const override {
    const UnitForest& f = *forest_;
    const Edge& ed = graph_->edge(e);
    if (role_[e] == EdgeRole::within_test)
      return unit_path_edges(f, ed.u, ed.v);
    if (role_[e] != EdgeRole::cross_test)
      throw std::invalid_argument("circuit_edges: not a test edge");
    EdgeId c = connector_.at(unit_pair_key(f.unit[ed.u], f.unit[ed.v]));
    const Edge& ce = graph_->edge(c);
    NodeId cu = f.unit[ce.u] == f.unit[ed.u] ? ce.u : ce.v;
    NodeId cv = ce.other(cu);
    auto path = unit_path_edges(f, ed.u, cu);
    path.push_back(c);
    auto tail = unit_path_edges(f, cv, ed.v);
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }

 private:
  const SignedGraph* graph_;
  std::shared_ptr<const UnitForest> forest_;
  std::unordered_map<std::uint64_t, EdgeId> connector_;
  std::vector<EdgeRole> role_;
};

}  // namespace

PredictionRecord predict_with_units(const SignedGraph& g, SignOracle& oracle,
                                    UnitForest forest,
                                    const UnitPredictOptions& opts) {
  const EdgeId m = g.edge_count();
  std::vector<EdgeRole> role(m, EdgeRole::unassigned);
  for (int u = 0; u < forest.unit_count(); ++u)
    for (NodeId x : forest.members[u])
      if (forest.parent[x] != -1)
        role[forest.parent_edge[x]] = EdgeRole::backbone_query;

  ConnectorSelection sel = select_connectors(g, forest, std::move(role));

  PredictionRecord rec;
  rec.role = std::move(sel.role);
  rec.partition.query_edges.reserve(forest.unit.size());
  for (EdgeId e = 0; e < m; ++e) {
    if (is_query(rec.role[e]))
      rec.partition.query_edges.push_back(e);
    else
      rec.partition.test_edges.push_back(e);
  }

  // Query phase: reveal exactly the query set, then seal before any
  // prediction is formed.
  std::vector<Sign> revealed(m, Sign::positive);
  for (EdgeId e : rec.partition.query_edges) revealed[e] = oracle.reveal(e);
  oracle.seal();

  // Parity tags per unit; members are in preorder so one sweep suffices.
  std::vector<Sign> tag(forest.unit.size(), Sign::positive);
  for (int u = 0; u < forest.unit_count(); ++u)
    for (NodeId x : forest.members[u])
      if (forest.parent[x] != -1)
        tag[x] = tag[forest.parent[x]] * revealed[forest.parent_edge[x]];

  rec.predicted.assign(m, Sign::positive);
  rec.circuit_len.assign(m, 0);
  std::int64_t len_sum = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    int len = 0;
    if (rec.role[e] == EdgeRole::within_test) {
      rec.predicted[e] = tag[ed.u] * tag[ed.v];
      len = unit_distance(forest, ed.u, ed.v);
    } else if (rec.role[e] == EdgeRole::cross_test) {
      EdgeId c = sel.connector.at(
          unit_pair_key(forest.unit[ed.u], forest.unit[ed.v]));
      const Edge& ce = g.edge(c);
      NodeId cu = forest.unit[ce.u] == forest.unit[ed.u] ? ce.u : ce.v;
      NodeId cv = ce.other(cu);
      rec.predicted[e] =
          tag[ed.u] * tag[cu] * revealed[c] * tag[cv] * tag[ed.v];
      len = unit_distance(forest, ed.u, cu) + 1 +
            unit_distance(forest, cv, ed.v);
    } else {
      rec.predicted[e] = revealed[e];
      continue;
    }
    if (len < 2)
      throw std::logic_error("unit predictor: circuit shorter than 2");
    if (opts.circuit_bound && len > *opts.circuit_bound)
      throw std::logic_error("unit predictor: circuit length " +
                             std::to_string(len) + " exceeds bound " +
                             std::to_string(*opts.circuit_bound));
    rec.circuit_len[e] = len;
    rec.max_circuit = std::max(rec.max_circuit, len);
    len_sum += len;
  }
  rec.mean_circuit = rec.partition.test_edges.empty()
                         ? 0.0
                         : static_cast<double>(len_sum) /
                               static_cast<double>(rec.partition.test_edges.size());

  auto shared_forest = std::make_shared<const UnitForest>(std::move(forest));
  rec.circuits = std::make_shared<UnitCircuits>(
      g, shared_forest, std::move(sel.connector), rec.role);
  return rec;
}

}  // namespace treelink
