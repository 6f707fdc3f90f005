#include "treelink/treelet.hpp"

#include <algorithm>
#include <stack>
#include <stdexcept>

namespace treelink {

namespace {

void require_k(int k) {
  if (k < 2)
    throw std::invalid_argument("treelet height parameter k must be >= 2");
}

}  // namespace

NodeId extract_treelet(RootedTree& t, int k) {
  require_k(k);
  if (t.member_count < 1 || !t.member[t.root])
    throw std::invalid_argument("extract_treelet: empty tree");

  // Depth-first visit; heights assigned at each node's last visit.
  std::stack<std::pair<NodeId, std::size_t>> st;
  st.push({t.root, 0});
  while (!st.empty()) {
    auto& [node, idx] = st.top();
    const auto& kids = t.children[node];
    while (idx < kids.size() && !t.member[kids[idx]]) ++idx;
    if (idx < kids.size()) {
      NodeId c = kids[idx++];
      st.push({c, 0});
      continue;
    }
    int h = 0;
    for (NodeId c : kids)
      if (t.member[c]) h = std::max(h, t.height[c] + 1);
    t.height[node] = h;
    if (h == k && node != t.root) return node;
    st.pop();
  }
  return t.root;
}

void remove_subtree(RootedTree& t, NodeId r) {
  std::stack<NodeId> st;
  st.push(r);
  while (!st.empty()) {
    NodeId x = st.top();
    st.pop();
    t.member[x] = 0;
    --t.member_count;
    for (NodeId c : t.children[x])
      if (t.member[c]) st.push(c);
  }
}

TreeletDecomposition decompose(const RootedTree& t, int k) {
  require_k(k);
  const auto n = static_cast<NodeId>(t.member.size());

  TreeletDecomposition dec;
  dec.k = k;
  dec.owner.assign(n, -1);
  dec.local_depth.assign(n, -1);

  std::vector<int> height(n, 0);
  std::vector<char> emitted(n, 0);

  auto emit = [&](NodeId root) {
    auto id = static_cast<std::int32_t>(dec.roots.size());
    dec.roots.push_back(root);
    dec.heights.push_back(height[root]);
    std::vector<NodeId> mem;
    // Preorder walk over the not-yet-emitted descendants.
    std::stack<NodeId> st;
    st.push(root);
    while (!st.empty()) {
      NodeId x = st.top();
      st.pop();
      emitted[x] = 1;
      dec.owner[x] = id;
      dec.local_depth[x] = t.depth[x] - t.depth[root];
      mem.push_back(x);
      const auto& kids = t.children[x];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        if (t.member[*it] && !emitted[*it]) st.push(*it);
    }
    dec.members.push_back(std::move(mem));
  };

  // Single depth-first visit; a node's height counts only children that are
  // still unemitted, so each emission behaves exactly like re-running the
  // extraction on the remaining tree.
  std::stack<std::pair<NodeId, std::size_t>> st;
  st.push({t.root, 0});
  while (!st.empty()) {
    auto& [node, idx] = st.top();
    const auto& kids = t.children[node];
    while (idx < kids.size() && !t.member[kids[idx]]) ++idx;
    if (idx < kids.size()) {
      NodeId c = kids[idx++];
      st.push({c, 0});
      continue;
    }
    int h = 0;
    for (NodeId c : kids)
      if (t.member[c] && !emitted[c]) h = std::max(h, height[c] + 1);
    height[node] = h;
    if (h == k && node != t.root) emit(node);
    st.pop();
  }
  emit(t.root);
  return dec;
}

}  // namespace treelink
