#include <doctest.h>

#include <sstream>

#include "testutil.hpp"
#include "treelink/graph.hpp"

using namespace treelink;
using namespace testutil;

TEST_SUITE_BEGIN("graph");

TEST_CASE("load: small edge list") {
  std::istringstream in("0 1 +1\n1 2 -1");
  auto r = load_edge_list(in);
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  int neg = 0;
  for (Sign s : r.graph.labels())
    if (s == Sign::negative) ++neg;
  CHECK(neg == 1);
  CHECK(r.duplicate_edges == 0);
  CHECK(r.self_loops == 0);
}

TEST_CASE("load: duplicate with matching sign collapses") {
  std::istringstream in("0 1 +1\n1 0 +1");
  auto r = load_edge_list(in);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.duplicate_edges == 1);
}

TEST_CASE("load: conflicting duplicate is a hard error") {
  std::istringstream in("0 1 +1\n1 0 -1");
  CHECK_THROWS_WITH_AS(load_edge_list(in),
                       doctest::Contains("conflicting duplicate edge"),
                       std::runtime_error);
}

TEST_CASE("load: self-loops dropped with counter") {
  std::istringstream in("0 0 +1\n0 1 -1");
  auto r = load_edge_list(in);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.self_loops == 1);
}

TEST_CASE("load: malformed lines name the line number") {
  {
    std::istringstream in("0 1 +1\n0 2 +2\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"),
                         std::runtime_error);
  }
  {
    std::istringstream in("0 1\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  {
    std::istringstream in("a b +1\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  {
    std::istringstream in("0 1 +1 extra\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
}

TEST_CASE("load: bare 1 accepted, comments and CRLF tolerated") {
  std::istringstream in("# header\r\n\r\n0 1 1\r\n  # indented comment\n1 2 -1\r\n");
  auto r = load_edge_list(in);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.label(0) == Sign::positive);
  CHECK(r.graph.label(1) == Sign::negative);
}

TEST_CASE("load: sparse ids remap densely, mapping retained") {
  std::istringstream in("5 9 +1\n9 7 -1");
  auto r = load_edge_list(in);
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.original_id(0) == 5);
  CHECK(r.graph.original_id(1) == 9);
  CHECK(r.graph.original_id(2) == 7);
}

TEST_CASE("save/load round-trip is isomorphic under the id mapping") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    SignedGraph g = random_connected_graph(30, 70, rng);
    std::vector<Sign> labels;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      labels.push_back((rng() & 1) ? Sign::positive : Sign::negative);
    SignedGraph lg(g.node_count(), g.edges(), labels);

    std::ostringstream out;
    save_edge_list(out, lg);
    std::istringstream in(out.str());
    auto r = load_edge_list(in);

    REQUIRE(r.graph.node_count() == lg.node_count());
    REQUIRE(r.graph.edge_count() == lg.edge_count());
    std::set<std::tuple<std::int64_t, std::int64_t, int>> a, b;
    for (EdgeId e = 0; e < lg.edge_count(); ++e) {
      auto [u, v] = std::pair(lg.original_id(lg.edge(e).u),
                              lg.original_id(lg.edge(e).v));
      a.insert({std::min(u, v), std::max(u, v), sign_int(lg.label(e))});
    }
    for (EdgeId e = 0; e < r.graph.edge_count(); ++e) {
      auto [u, v] = std::pair(r.graph.original_id(r.graph.edge(e).u),
                              r.graph.original_id(r.graph.edge(e).v));
      b.insert({std::min(u, v), std::max(u, v), sign_int(r.graph.label(e))});
    }
    CHECK(a == b);
  }
}

TEST_CASE("adjacency is the exact inverse image of the edge list") {
  Rng rng(13);
  SignedGraph g = random_connected_graph(40, 120, rng);
  std::size_t entries = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const Edge& e = g.edge(nb.edge);
      CHECK(((e.u == v && e.v == nb.node) || (e.v == v && e.u == nb.node)));
      ++entries;
    }
  }
  CHECK(entries == 2 * static_cast<std::size_t>(g.edge_count()));
}

TEST_CASE("constructor rejects self-loops, duplicates, bad endpoints") {
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 1}, Edge{1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(0, {}), std::invalid_argument);
}

TEST_CASE("connectivity probes") {
  SignedGraph g(4, {Edge{0, 1}, Edge{2, 3}});
  CHECK_FALSE(is_connected(g));
  CHECK(first_unreachable(g).value() == 2);
  CHECK_THROWS_WITH_AS(require_connected(g, "caller"),
                       doctest::Contains("disconnected"), std::runtime_error);
  CHECK(is_connected(path_graph(5)));
}

TEST_CASE("largest component keeps the bigger side and remaps") {
  // component {0,1,2} with 3 edges vs component {3,4}
  SignedGraph g(5, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}},
                {Sign::positive, Sign::negative, Sign::positive,
                 Sign::negative});
  auto ex = largest_component(g);
  CHECK(ex.graph.node_count() == 3);
  CHECK(ex.graph.edge_count() == 3);
  CHECK(ex.removed_nodes == 2);
  CHECK(ex.removed_edges == 1);
  CHECK(ex.graph.original_id(2) == 2);
}

TEST_CASE("diameter: path and complete graph") {
  for (NodeId n : {2, 5, 9}) CHECK(graph_diameter(path_graph(n)) == n - 1);
  CHECK(graph_diameter(complete_graph(4)) == 1);
}

TEST_CASE("diameter matches Floyd-Warshall on random graphs") {
  Rng rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    SignedGraph g = random_connected_graph(12, 20, rng);
    auto d = floyd_warshall(g);
    int want = 0;
    for (const auto& row : d)
      for (int x : row) want = std::max(want, x);
    CHECK(graph_diameter(g) == want);
  }
}

TEST_SUITE_END();
