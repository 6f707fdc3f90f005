#pragma once

#include <span>
#include <vector>

#include "treelink/graph.hpp"
#include "treelink/types.hpp"

namespace treelink {

enum class NeighborOrder { input, shuffled };

/// Rooted tree (or subtree) over the nodes of a host graph.
///
/// parent/parent_edge/depth are -1 outside the member set. `tag` holds the
/// per-node parity label y_i with tag[u]*tag[v] equal to the sign product
/// along the tree path u..v once tag_parities has run.
struct RootedTree {
  NodeId root = -1;
  std::vector<NodeId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
  std::vector<int> height;  // subtree height per node; filled on demand
  std::vector<Sign> tag;
  std::vector<char> member;
  std::vector<std::vector<NodeId>> children;
  NodeId member_count = 0;

  bool is_member(NodeId v) const { return member[v] != 0; }
};

/// Highest-degree node, ties to the smallest id.
NodeId default_root(const SignedGraph& g);

/// Breadth-first spanning tree. Neighbor visitation follows adjacency input
/// order or a per-node seeded shuffle. Throws on disconnected input, naming
/// an unreachable node.
RootedTree bfs_spanning_tree(const SignedGraph& g, NodeId root,
                             NeighborOrder order, Rng& rng);

/// Fills `height` bottom-up over the current member set: leaves 0, internal
/// nodes 1 + max over member children.
void compute_heights(RootedTree& t);

/// Propagates parity tags from the root: tag[root]=+1, tag[child] =
/// tag[parent] * sign(tree edge). `edge_signs` is indexed by edge id and must
/// cover every tree edge of the member set.
void tag_parities(RootedTree& t, std::span<const Sign> edge_signs);
void tag_parities(RootedTree& t, const SignedGraph& g);

/// Constant-time path parity between two member nodes (tags required).
Sign tree_path_parity(const RootedTree& t, NodeId u, NodeId v);

/// Length of the unique tree path between two member nodes.
int tree_distance(const RootedTree& t, NodeId u, NodeId v);

/// Edge ids along the unique tree path u..v, in order from u to v.
std::vector<EdgeId> tree_path_edges(const RootedTree& t, NodeId u, NodeId v);

int tree_height(const RootedTree& t);

}  // namespace treelink
