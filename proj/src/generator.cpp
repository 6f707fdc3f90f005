#include "treelink/generator.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace treelink {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Connectivity over the surviving edges, optionally pretending one more edge
// is gone.
bool connected_without(const SignedGraph& g, const std::vector<char>& alive,
                       EdgeId skip) {
  std::vector<char> seen(g.node_count(), 0);
  std::queue<NodeId> q;
  q.push(0);
  seen[0] = 1;
  NodeId count = 1;
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    for (const Neighbor& nb : g.neighbors(x)) {
      if (!alive[nb.edge] || nb.edge == skip || seen[nb.node]) continue;
      seen[nb.node] = 1;
      ++count;
      q.push(nb.node);
    }
  }
  return count == g.node_count();
}

}  // namespace

GeneratedGraph generate_planted_graph(const GeneratorSpec& spec) {
  const NodeId n = spec.nodes;
  if (n < 1) throw std::invalid_argument("generator: need >= 1 node");
  if (spec.target_edges < n - 1)
    throw std::invalid_argument("generator: target_edges must be >= n-1");
  const auto capacity =
      static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (spec.target_edges > capacity)
    throw std::invalid_argument("generator: target_edges exceeds simple-graph capacity");
  if (spec.negative_fraction_target < 0.0 ||
      spec.negative_fraction_target >= 1.0)
    throw std::invalid_argument("generator: negative fraction target must be in [0,1)");
  if (spec.target_edges > capacity / 2 && n > 4000)
    throw std::invalid_argument("generator: dense requests above half capacity are unsupported at this size");

  Rng rng(spec.seed);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<Edge> edges;
  edges.reserve(spec.target_edges);
  std::unordered_set<std::uint64_t> used;
  used.reserve(spec.target_edges * 2);
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> pick(0, i - 1);
    Edge e{perm[i], perm[pick(rng)]};
    edges.push_back(e);
    used.insert(pair_key(e.u, e.v));
  }
  std::uniform_int_distribution<NodeId> any(0, n - 1);
  while (static_cast<EdgeId>(edges.size()) < spec.target_edges) {
    NodeId u = any(rng), v = any(rng);
    if (u == v) continue;
    if (!used.insert(pair_key(u, v)).second) continue;
    edges.push_back(Edge{u, v});
  }

  TwoClustering clustering = split_clustering(n, spec.cluster_split);
  SignedGraph g(n, std::move(edges));
  LabelAssignment labels = consistent_labels(g, clustering);

  const double lo = spec.negative_fraction_target - 0.02;
  const double hi = spec.negative_fraction_target + 0.02;
  std::int64_t negatives = 0;
  for (Sign s : labels.realized)
    if (s == Sign::negative) ++negatives;

  std::vector<char> alive(g.edge_count(), 1);
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (labels.realized[e] == Sign::positive) candidates.push_back(e);

  std::int64_t alive_count = g.edge_count();
  EdgeId pruned = 0;
  auto fraction = [&] {
    return alive_count == 0 ? 0.0 : double(negatives) / double(alive_count);
  };
  while (fraction() < lo && !candidates.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::size_t slot = pick(rng);
    EdgeId e = candidates[slot];
    candidates[slot] = candidates.back();
    candidates.pop_back();
    // Bridges stay bridges as other edges disappear, so dropping the
    // candidate permanently is safe.
    if (!connected_without(g, alive, e)) continue;
    alive[e] = 0;
    --alive_count;
    ++pruned;
  }
  const double achieved = fraction();
  if (achieved < lo - 1e-12 || achieved > hi + 1e-12)
    throw std::runtime_error(
        "generator: negative fraction target " +
        std::to_string(spec.negative_fraction_target) +
        " is unreachable; achieved " + std::to_string(achieved));

  std::vector<Edge> kept;
  std::vector<Sign> kept_labels;
  kept.reserve(alive_count);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (alive[e]) {
      kept.push_back(g.edge(e));
      kept_labels.push_back(labels.realized[e]);
    }
  }
  GeneratedGraph out;
  out.graph = SignedGraph(n, std::move(kept), std::move(kept_labels));
  out.clustering = std::move(clustering);
  out.pruned_edges = pruned;
  out.achieved_negative_fraction = achieved;
  return out;
}

}  // namespace treelink
