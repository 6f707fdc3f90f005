#pragma once

#include <vector>

#include "treelink/tree.hpp"
#include "treelink/types.hpp"

namespace treelink {

/// Node-disjoint subtrees of height <= k covering a spanning tree; all but
/// the last extracted treelet have height exactly k.
struct TreeletDecomposition {
  int k = 0;
  std::vector<std::int32_t> owner;  // node -> treelet index
  std::vector<NodeId> roots;        // per treelet, in extraction order
  std::vector<int> heights;         // per treelet
  std::vector<std::vector<NodeId>> members;  // per treelet, preorder
  std::vector<int> local_depth;     // node depth below its treelet root

  std::size_t size() const { return roots.size(); }
};

/// One extraction step: depth-first visit of t's current member set,
/// computing subtree heights bottom-up; returns the first node (in last-visit
/// order) whose height reaches k, or the root if none does. Mutates only
/// t.height.
NodeId extract_treelet(RootedTree& t, int k);

/// Detaches the subtree rooted at r from the member set.
void remove_subtree(RootedTree& t, NodeId r);

/// Repeated extraction until the tree is empty, in one linear pass.
TreeletDecomposition decompose(const RootedTree& t, int k);

}  // namespace treelink
