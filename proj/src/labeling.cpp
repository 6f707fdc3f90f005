#include "treelink/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace treelink {

TwoClustering uniform_random_clustering(NodeId node_count, Rng& rng) {
  TwoClustering c;
  c.side.resize(node_count);
  for (auto& s : c.side) s = static_cast<std::uint8_t>(rng() & 1u);
  return c;
}

TwoClustering split_clustering(NodeId node_count, double ratio) {
  if (ratio < 0.0 || ratio > 1.0)
    throw std::invalid_argument("split ratio must be in [0,1]");
  TwoClustering c;
  c.side.assign(node_count, 1);
  auto zero = static_cast<NodeId>(std::lround(ratio * node_count));
  for (NodeId v = 0; v < std::min(zero, node_count); ++v) c.side[v] = 0;
  return c;
}

const char* flip_mode_name(FlipMode m) {
  return m == FlipMode::iid ? "iid" : "fact1";
}

FlipMode flip_mode_from_name(const std::string& name) {
  if (name == "iid") return FlipMode::iid;
  if (name == "fact1") return FlipMode::fact1;
  throw std::invalid_argument("unknown flip mode '" + name + "'");
}

EdgeId LabelAssignment::flipped_count() const {
  return static_cast<EdgeId>(std::count(flipped.begin(), flipped.end(), 1));
}

LabelAssignment consistent_labels(const SignedGraph& g,
                                  const TwoClustering& c) {
  if (c.side.size() != static_cast<std::size_t>(g.node_count()))
    throw std::invalid_argument("clustering does not cover all nodes");
  LabelAssignment a;
  a.base = c;
  a.realized.resize(g.edge_count());
  a.flipped.assign(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    a.realized[e] = c.side[ed.u] == c.side[ed.v] ? Sign::positive
                                                 : Sign::negative;
  }
  return a;
}

LabelAssignment p_stochastic_flip(const LabelAssignment& base, double p,
                                  FlipMode mode, Rng& rng) {
  if (p < 0.0 || p >= 0.5)
    throw std::invalid_argument("flip probability must satisfy 0 <= p < 1/2");
  LabelAssignment a = base;
  a.p = p;
  a.fact1_selected = 0;
  std::fill(a.flipped.begin(), a.flipped.end(), 0);
  const auto m = static_cast<EdgeId>(base.realized.size());
  for (EdgeId e = 0; e < m; ++e) a.realized[e] = base.realized[e];

  if (mode == FlipMode::iid) {
    std::bernoulli_distribution flip(p);
    for (EdgeId e = 0; e < m; ++e) {
      if (flip(rng)) {
        a.flipped[e] = 1;
        a.realized[e] = opposite(a.realized[e]);
      }
    }
  } else {
    // floor(2p|E|) edges drawn without replacement, each re-signed by a fair
    // coin; flooring keeps the per-edge flip probability <= p.
    auto chosen = static_cast<EdgeId>(std::floor(2.0 * p * m));
    a.fact1_selected = chosen;
    std::vector<EdgeId> ids(m);
    std::iota(ids.begin(), ids.end(), 0);
    for (EdgeId i = 0; i < chosen; ++i) {
      std::uniform_int_distribution<EdgeId> pick(i, m - 1);
      std::swap(ids[i], ids[pick(rng)]);
      EdgeId e = ids[i];
      Sign fresh = (rng() & 1u) ? Sign::positive : Sign::negative;
      if (fresh != base.realized[e]) {
        a.flipped[e] = 1;
        a.realized[e] = fresh;
      }
    }
  }
  return a;
}

double lower_bound_mistakes(double p, std::int64_t test_count) {
  if (p < 0.0 || p >= 0.5)
    throw std::invalid_argument("flip probability must satisfy 0 <= p < 1/2");
  if (test_count < 0) throw std::invalid_argument("negative test count");
  return p * static_cast<double>(test_count);
}

}  // namespace treelink
