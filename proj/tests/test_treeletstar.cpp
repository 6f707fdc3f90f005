#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "treelink/labeling.hpp"
#include "treelink/oracle.hpp"
#include "treelink/starmaker.hpp"
#include "treelink/treeletstar.hpp"

using namespace treelink;
using namespace testutil;

TEST_SUITE_BEGIN("treeletstar");

TEST_CASE("contraction of the 5-path decomposition is a single witnessed edge") {
  SignedGraph g = path_graph(5);
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  TreeletDecomposition dec = decompose(t, 2);  // {2,3,4} and {0,1}
  ContractionGraph cg = build_contraction_graph(g, dec);
  CHECK(cg.node_count() == 2);
  REQUIRE(cg.edge_count() == 1);
  // Witness is the host edge (1,2), the only edge joining the treelets.
  CHECK(g.edge(cg.witness(0)).u == 1);
  CHECK(g.edge(cg.witness(0)).v == 2);
}

TEST_CASE("single-treelet decomposition contracts to one isolated node") {
  SignedGraph g = path_graph(4);
  Rng rng(1);
  RootedTree t = bfs_spanning_tree(g, 0, NeighborOrder::input, rng);
  TreeletDecomposition dec = decompose(t, 3);
  ContractionGraph cg = build_contraction_graph(g, dec);
  CHECK(cg.node_count() == 1);
  CHECK(cg.edge_count() == 0);
}

TEST_CASE("contraction edges match the quadratic pairwise oracle") {
  Rng rng(301);
  for (int rep = 0; rep < 40; ++rep) {
    const NodeId n = static_cast<NodeId>(10 + rng() % 91);
    SignedGraph g = random_connected_graph(n, 3 * n, rng);
    RootedTree t = bfs_spanning_tree(g, static_cast<NodeId>(rng() % n),
                                     NeighborOrder::shuffled, rng);
    TreeletDecomposition dec = decompose(t, 2);
    ContractionGraph cg = build_contraction_graph(g, dec);

    const auto units = static_cast<std::int32_t>(dec.size());
    std::vector<std::vector<char>> adjacent(units,
                                            std::vector<char>(units, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto a = dec.owner[g.edge(e).u], b = dec.owner[g.edge(e).v];
      if (a != b) adjacent[a][b] = adjacent[b][a] = 1;
    }
    std::vector<std::vector<char>> got(units, std::vector<char>(units, 0));
    for (EdgeId ce = 0; ce < cg.edge_count(); ++ce) {
      auto a = cg.edge(ce).u, b = cg.edge(ce).v;
      CHECK_FALSE(got[a][b]);  // simple
      got[a][b] = got[b][a] = 1;
      // Witness endpoints live in the two treelets it connects.
      auto wu = dec.owner[g.edge(cg.witness(ce)).u];
      auto wv = dec.owner[g.edge(cg.witness(ce)).v];
      CHECK(std::minmax(wu, wv) == std::minmax<std::int32_t>(a, b));
    }
    CHECK(got == adjacent);
  }
}

TEST_CASE("never a mistake under consistent labels") {
  Rng rng(311);
  for (int rep = 0; rep < 25; ++rep) {
    const NodeId n = static_cast<NodeId>(10 + rng() % 90);
    SignedGraph g = random_connected_graph(n, 3 * n, rng);
    auto truth = consistent_labels(g, uniform_random_clustering(n, rng));
    for (int k : {2, 3}) {
      SignOracle oracle(truth.realized);
      Rng run_rng(rep * 10 + k);
      LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
      auto rec = run_treeletstar(g, oracle, k, opts, run_rng);
      CHECK(count_mistakes(rec, truth.realized) == 0);
    }
  }
}

TEST_CASE("tree height <= k degrades to the spanning tree, record for record") {
  Rng rng(321);
  for (int rep = 0; rep < 10; ++rep) {
    // Dense graphs keep the BFS tree shallow.
    SignedGraph g = random_connected_graph(60, 900, rng);
    auto truth = consistent_labels(g, uniform_random_clustering(60, rng));
    SignOracle o1(truth.realized), o2(truth.realized);
    Rng r1(rep), r2(rep);
    LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
    auto tree_only = run_spanning_tree(g, o1, opts, r1);
    auto ts = run_treeletstar(g, o2, 40, opts, r2);
    CHECK(ts.partition.query_edges.size() ==
          static_cast<std::size_t>(g.node_count()) - 1);
    CHECK(same_predictions(tree_only, ts));
  }
}

TEST_CASE("reference suite: query-size bound and 12k+5 circuit cap") {
  Rng rng(331);
  const int k = 3;
  const double cap = 119.0 + std::pow((120.0 - 1.0) / k + 1.0, 1.5);
  for (int rep = 0; rep < 100; ++rep) {
    SignedGraph g = random_connected_graph(120, 480, rng);
    auto truth = consistent_labels(g, uniform_random_clustering(120, rng));
    SignOracle oracle(truth.realized);
    Rng run_rng(rep);
    LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
    auto rec = run_treeletstar(g, oracle, k, opts, run_rng);
    CHECK(double(rec.partition.query_edges.size()) <= cap);
    CHECK(rec.partition.query_edges.size() <= 379);
    CHECK(rec.max_circuit <= 12 * k + 5);
    CHECK(rec.max_circuit <= 41);
    CHECK(rec.query_bound_ok);
  }
}

TEST_CASE("budget never exceeds starmaker when a real treelet exists") {
  Rng rng(341);
  int compared = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const NodeId n = static_cast<NodeId>(30 + rng() % 120);
    SignedGraph g =
        random_connected_graph(n, static_cast<EdgeId>(2 * n + rng() % (3 * n)), rng);
    auto truth = consistent_labels(g, uniform_random_clustering(n, rng));

    Rng probe_rng(rep);
    RootedTree t = bfs_spanning_tree(g, default_root(g),
                                     NeighborOrder::shuffled, probe_rng);
    TreeletDecomposition dec = decompose(t, 2);
    bool has_big_treelet = false;
    for (const auto& mem : dec.members)
      if (mem.size() > 1) has_big_treelet = true;
    if (!has_big_treelet) continue;

    SignOracle o1(truth.realized), o2(truth.realized);
    Rng r1(rep);
    LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
    auto ts = run_treeletstar(g, o1, 2, opts, r1);
    auto sm = run_starmaker(g, o2);
    CHECK(ts.partition.query_edges.size() <= sm.partition.query_edges.size());
    ++compared;
  }
  CHECK(compared > 0);
}

TEST_CASE("oracle discipline, circuit validity, deterministic bound") {
  Rng rng(351);
  for (int rep = 0; rep < 15; ++rep) {
    SignedGraph g = random_connected_graph(70, 280, rng);
    auto base = consistent_labels(g, uniform_random_clustering(70, rng));
    Rng flip_rng(444 + rep);
    auto truth = p_stochastic_flip(base, 0.1, FlipMode::iid, flip_rng);
    SignOracle oracle(truth.realized);
    Rng run_rng(rep);
    LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
    auto rec = run_treeletstar(g, oracle, 2, opts, run_rng);

    CHECK(oracle.sealed());
    CHECK(oracle.reveal_count() ==
          static_cast<std::int64_t>(rec.partition.query_edges.size()));
    CHECK_NOTHROW(verify_circuits(g, rec, truth.realized));

    std::int64_t rhs = truth.flipped_count();
    for (EdgeId e : rec.partition.test_edges)
      for (EdgeId pe : rec.circuits->circuit_edges(e))
        if (truth.flipped[pe]) ++rhs;
    CHECK(count_mistakes(rec, truth.realized) <= rhs);
  }
}

TEST_CASE("Fact-2 style Monte Carlo bound with the instrumented cap") {
  Rng rng(361);
  SignedGraph g = random_connected_graph(100, 800, rng);
  auto base = consistent_labels(g, uniform_random_clustering(100, rng));
  const double p = 0.05;
  const int trials = 200;
  std::vector<double> mistakes;
  double test_count = 0;
  int ell = 0;
  for (int t = 0; t < trials; ++t) {
    Rng flip_rng(derive_seed(8000, t));
    auto truth = p_stochastic_flip(base, p, FlipMode::iid, flip_rng);
    SignOracle oracle(truth.realized);
    Rng run_rng(derive_seed(9000, t));
    LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
    auto rec = run_treeletstar(g, oracle, 3, opts, run_rng);
    mistakes.push_back(double(count_mistakes(rec, truth.realized)));
    test_count = double(rec.partition.test_edges.size());
    ell = std::max(ell, rec.max_circuit);
  }
  auto s = mean_std(mistakes);
  CHECK(s.mean <= ell * p * test_count +
                      3.0 * s.stddev / std::sqrt(double(trials)));
}

TEST_CASE("identical inputs give identical records, and k<2 is rejected") {
  Rng rng(371);
  SignedGraph g = random_connected_graph(50, 200, rng);
  auto truth = consistent_labels(g, uniform_random_clustering(50, rng));
  SignOracle o1(truth.realized), o2(truth.realized);
  Rng r1(9), r2(9);
  LearnerOptions opts{NeighborOrder::shuffled, std::nullopt};
  auto a = run_treeletstar(g, o1, 3, opts, r1);
  auto b = run_treeletstar(g, o2, 3, opts, r2);
  CHECK(same_predictions(a, b));

  SignOracle o3(truth.realized);
  Rng r3(9);
  CHECK_THROWS_AS(run_treeletstar(g, o3, 1, opts, r3), std::invalid_argument);
}

TEST_SUITE_END();
