#pragma once

#include <optional>
#include <vector>

#include "treelink/heap.hpp"
#include "treelink/types.hpp"

namespace treelink {

struct Star {
  NodeId center = -1;
  std::vector<NodeId> leaves;
  std::vector<EdgeId> edges;  // host edges center-leaf, aligned with leaves
};

struct StarDecomposition {
  std::vector<Star> stars;
  std::vector<std::int32_t> owner;  // node -> star index
};

/// One extraction: pops the highest-degree unassigned node as center and
/// claims its still-unassigned neighbors as leaves. Returns nullopt once all
/// nodes are assigned. Works on any graph exposing node_count()/neighbors().
template <class GraphT>
std::optional<Star> extract_star(const GraphT& g, MaxDegreeHeap& heap,
                                 std::vector<std::int32_t>& owner,
                                 std::int32_t star_index) {
  auto center = heap.pop_max();
  if (!center) return std::nullopt;
  Star s;
  s.center = *center;
  owner[s.center] = star_index;
  for (const auto& nb : g.neighbors(s.center)) {
    if (owner[nb.node] != -1) continue;
    owner[nb.node] = star_index;
    heap.mark_not_in_use(nb.node);
    s.leaves.push_back(nb.node);
    s.edges.push_back(nb.edge);
  }
  return s;
}

template <class GraphT>
StarDecomposition decompose_stars(const GraphT& g) {
  StarDecomposition dec;
  dec.owner.assign(g.node_count(), -1);
  std::vector<NodeId> degree(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    degree[v] = static_cast<NodeId>(g.neighbors(v).size());
  MaxDegreeHeap heap(degree);
  while (auto s = extract_star(g, heap, dec.owner,
                               static_cast<std::int32_t>(dec.stars.size())))
    dec.stars.push_back(std::move(*s));
  return dec;
}

}  // namespace treelink
