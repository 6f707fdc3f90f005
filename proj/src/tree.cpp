#include "treelink/tree.hpp"

#include <algorithm>
#include <queue>
#include <stack>
#include <stdexcept>

namespace treelink {

NodeId default_root(const SignedGraph& g) {
  NodeId best = 0;
  for (NodeId v = 1; v < g.node_count(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

RootedTree bfs_spanning_tree(const SignedGraph& g, NodeId root,
                             NeighborOrder order, Rng& rng) {
  if (root < 0 || root >= g.node_count())
    throw std::invalid_argument("bfs_spanning_tree: root out of range");

  RootedTree t;
  const NodeId n = g.node_count();
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, -1);
  t.height.assign(n, -1);
  t.tag.assign(n, Sign::positive);
  t.member.assign(n, 0);
  t.children.assign(n, {});

  std::queue<NodeId> q;
  q.push(root);
  t.depth[root] = 0;
  t.member[root] = 1;
  t.member_count = 1;
  std::vector<Neighbor> shuffled;
  while (!q.empty()) {
    NodeId x = q.front();
    q.pop();
    auto visit = [&](const Neighbor& nb) {
      if (t.depth[nb.node] >= 0) return;
      t.depth[nb.node] = t.depth[x] + 1;
      t.parent[nb.node] = x;
      t.parent_edge[nb.node] = nb.edge;
      t.member[nb.node] = 1;
      ++t.member_count;
      t.children[x].push_back(nb.node);
      q.push(nb.node);
    };
    auto span = g.neighbors(x);
    if (order == NeighborOrder::shuffled) {
      shuffled.assign(span.begin(), span.end());
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (const Neighbor& nb : shuffled) visit(nb);
    } else {
      for (const Neighbor& nb : span) visit(nb);
    }
  }
  if (t.member_count != n) {
    for (NodeId v = 0; v < n; ++v) {
      if (!t.member[v])
        throw std::runtime_error(
            "bfs_spanning_tree: graph is disconnected, node " +
            std::to_string(v) + " (original id " +
            std::to_string(g.original_id(v)) + ") is unreachable");
    }
  }
  return t;
}

void compute_heights(RootedTree& t) {
  // Iterative post-order restricted to members.
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
    st.pop();
  }
}

void tag_parities(RootedTree& t, std::span<const Sign> edge_signs) {
  std::stack<NodeId> st;
  st.push(t.root);
  t.tag[t.root] = Sign::positive;
  while (!st.empty()) {
    NodeId x = st.top();
    st.pop();
    for (NodeId c : t.children[x]) {
      if (!t.member[c]) continue;
      t.tag[c] = t.tag[x] * edge_signs[t.parent_edge[c]];
      st.push(c);
    }
  }
}

void tag_parities(RootedTree& t, const SignedGraph& g) {
  if (!g.has_labels())
    throw std::invalid_argument("tag_parities: graph carries no labels");
  tag_parities(t, std::span<const Sign>(g.labels()));
}

namespace {

void require_member(const RootedTree& t, NodeId v, const char* who) {
  if (v < 0 || v >= static_cast<NodeId>(t.member.size()) || !t.member[v])
    throw std::invalid_argument(std::string(who) + ": node " +
                                std::to_string(v) + " is not in the tree");
}

}  // namespace

Sign tree_path_parity(const RootedTree& t, NodeId u, NodeId v) {
  require_member(t, u, "tree_path_parity");
  require_member(t, v, "tree_path_parity");
  return t.tag[u] * t.tag[v];
}

int tree_distance(const RootedTree& t, NodeId u, NodeId v) {
  require_member(t, u, "tree_distance");
  require_member(t, v, "tree_distance");
  int d = 0;
  while (t.depth[u] > t.depth[v]) u = t.parent[u], ++d;
  while (t.depth[v] > t.depth[u]) v = t.parent[v], ++d;
  while (u != v) u = t.parent[u], v = t.parent[v], d += 2;
  return d;
}

std::vector<EdgeId> tree_path_edges(const RootedTree& t, NodeId u, NodeId v) {
  require_member(t, u, "tree_path_edges");
  require_member(t, v, "tree_path_edges");
  std::vector<EdgeId> up, down;
  while (t.depth[u] > t.depth[v]) {
    up.push_back(t.parent_edge[u]);
    u = t.parent[u];
  }
  while (t.depth[v] > t.depth[u]) {
    down.push_back(t.parent_edge[v]);
    v = t.parent[v];
  }
  while (u != v) {
    up.push_back(t.parent_edge[u]);
    down.push_back(t.parent_edge[v]);
    u = t.parent[u];
    v = t.parent[v];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int tree_height(const RootedTree& t) {
  int h = 0;
  for (NodeId v = 0; v < static_cast<NodeId>(t.depth.size()); ++v)
    if (t.member[v]) h = std::max(h, t.depth[v]);
  return h;
}

}  // namespace treelink
