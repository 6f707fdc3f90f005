#include <doctest.h>

#include "testutil.hpp"
#include "treelink/tree.hpp"
#include "treelink/treelet.hpp"

using namespace treelink;
using namespace testutil;

TEST_SUITE_BEGIN("tree");

TEST_CASE("bfs on a path") {
  SignedGraph g = path_graph(3);
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  CHECK(t.parent == std::vector<NodeId>{-1, 0, 1});
  CHECK(t.depth == std::vector<int>{0, 1, 2});
  CHECK(t.member_count == 3);
}

TEST_CASE("bfs on a star rooted at the center") {
  std::vector<EdgeSpec> es;
  for (NodeId v = 1; v < 7; ++v) es.push_back({0, v});
  SignedGraph g = make_graph(7, es, false);
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  for (NodeId v = 1; v < 7; ++v) CHECK(t.depth[v] == 1);
  CHECK(tree_height(t) == 1);
}

TEST_CASE("bfs depth equals shortest-path distance on all small graphs") {
  // Exhaustive over every connected labeled graph with up to 5 nodes, both
  // neighbor orders, every root.
  for (NodeId n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const SignedGraph& g) {
      for (NodeId root = 0; root < n; ++root) {
        for (auto order : {NeighborOrder::input, NeighborOrder::shuffled}) {
          Rng rng(root + 1);
          RootedTree t = bfs_spanning_tree(g, root, order, rng);
          auto dist = bfs_distances(g, root);
          int edges = 0;
          for (NodeId v = 0; v < n; ++v) {
            CHECK(t.depth[v] == dist[v]);
            if (t.parent[v] != -1) ++edges;
          }
          CHECK(edges == n - 1);
        }
      }
    });
  }
}

TEST_CASE("bfs depth equals shortest-path distance, K4 and random 6-node") {
  SignedGraph k4 = complete_graph(4);
  Rng rng(5);
  RootedTree t = bfs_spanning_tree(k4, 2, NeighborOrder::input, rng);
  CHECK(tree_height(t) == 1);
  Rng gen(99);
  for (int rep = 0; rep < 200; ++rep) {
    SignedGraph g = random_connected_graph(6, 9, gen);
    NodeId root = static_cast<NodeId>(gen() % 6);
    RootedTree tr = bfs_spanning_tree(g, root, NeighborOrder::shuffled, gen);
    auto dist = bfs_distances(g, root);
    for (NodeId v = 0; v < 6; ++v) CHECK(tr.depth[v] == dist[v]);

    // Breadth-first visit keeps the tree shallow: height within the graph
    // diameter, tree diameter within twice of it.
    const int diameter = graph_diameter(g);
    CHECK(tree_height(tr) <= diameter);
    int tree_diam = 0;
    for (NodeId u = 0; u < 6; ++u)
      for (NodeId v = u + 1; v < 6; ++v)
        tree_diam = std::max(tree_diam, tree_distance(tr, u, v));
    CHECK(tree_diam <= 2 * diameter);
  }
}

TEST_CASE("bfs rejects disconnected graphs naming an unreachable node") {
  SignedGraph g(4, {Edge{0, 1}, Edge{2, 3}});
  Rng rng(1);
  CHECK_THROWS_WITH_AS(bfs_spanning_tree(g, 0, NeighborOrder::input, rng),
                       doctest::Contains("unreachable"), std::runtime_error);
}

TEST_CASE("default root is the highest-degree node, smallest id on ties") {
  SignedGraph g = make_graph(
      5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}}, false);
  // degrees: 0:1 1:3 2:3 3:3 4:2 -> tie among 1,2,3 -> 1
  CHECK(default_root(g) == 1);
  CHECK(default_root(cycle_graph(6)) == 0);
}

TEST_CASE("tag parities: all-positive tree") {
  SignedGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  tag_parities(t, g);
  for (NodeId v = 0; v < 4; ++v) CHECK(t.tag[v] == Sign::positive);
}

TEST_CASE("tag parities: mixed signs on a path") {
  SignedGraph g =
      make_graph(3, {{0, 1, Sign::positive}, {1, 2, Sign::negative}});
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  tag_parities(t, g);
  CHECK(t.tag[0] == Sign::positive);
  CHECK(t.tag[1] == Sign::positive);
  CHECK(t.tag[2] == Sign::negative);
  CHECK(tree_path_parity(t, 0, 2) == Sign::negative);
}

TEST_CASE("tag product equals brute-force path product on random trees") {
  Rng rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const NodeId n = static_cast<NodeId>(5 + rng() % 46);  // up to 50
    SignedGraph skeleton = random_connected_graph(n, n - 1, rng);
    std::vector<Sign> signs;
    for (EdgeId e = 0; e < skeleton.edge_count(); ++e)
      signs.push_back((rng() & 1) ? Sign::positive : Sign::negative);
    SignedGraph g(n, skeleton.edges(), signs);
    RootedTree t = bfs_spanning_tree(g, static_cast<NodeId>(rng() % n),
                                     NeighborOrder::shuffled, rng);
    tag_parities(t, g);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) {
        Sign want = brute_tree_path_sign(t, g.labels(), u, v);
        CHECK(tree_path_parity(t, u, v) == want);
        CHECK(t.tag[u] * t.tag[v] == want);
      }
  }
}

TEST_CASE("tree path edges and distance agree with each other") {
  Rng rng(31);
  for (int rep = 0; rep < 30; ++rep) {
    const NodeId n = 20;
    SignedGraph g = random_connected_graph(n, n - 1, rng);
    RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::shuffled, rng);
    for (int probe = 0; probe < 30; ++probe) {
      NodeId u = static_cast<NodeId>(rng() % n);
      NodeId v = static_cast<NodeId>(rng() % n);
      auto path = tree_path_edges(t, u, v);
      CHECK(static_cast<int>(path.size()) == tree_distance(t, u, v));
      NodeId at = u;
      for (EdgeId e : path) at = g.edge(e).other(at);
      CHECK(at == v);
    }
  }
}

TEST_CASE("parity query on a non-member node throws") {
  SignedGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  tag_parities(t, g);
  remove_subtree(t, 3);  // drops {3,4}
  CHECK_THROWS_AS(tree_path_parity(t, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(tree_distance(t, 3, 0), std::invalid_argument);
}

TEST_CASE("compute_heights follows the bottom-up rule") {
  SignedGraph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  compute_heights(t);
  CHECK(t.height[3] == 0);
  CHECK(t.height[5] == 0);
  CHECK(t.height[2] == 1);
  CHECK(t.height[4] == 1);
  CHECK(t.height[1] == 2);
  CHECK(t.height[0] == 3);
}

TEST_SUITE_END();
