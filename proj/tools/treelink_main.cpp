#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treelink/cleaning.hpp"
#include "treelink/experiment.hpp"
#include "treelink/generator.hpp"
#include "treelink/graph.hpp"
#include "treelink/metrics.hpp"

namespace {

using namespace treelink;

std::string default_output_dir() {
  if (const char* env = std::getenv("TREELINK_OUT")) return env;
  return ".";
}

int cmd_generate(const GeneratorSpec& spec, const std::string& out_prefix) {
  GeneratedGraph gen = generate_planted_graph(spec);
  auto parent = std::filesystem::path(out_prefix).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  save_edge_list_file(out_prefix + ".edges", gen.graph);
  save_clustering_json(out_prefix + ".clusters.json", gen.clustering, &spec);
  std::cout << "generated " << gen.graph.node_count() << " nodes, "
            << gen.graph.edge_count() << " edges, negative fraction "
            << gen.achieved_negative_fraction << " (pruned "
            << gen.pruned_edges << " positive edges)\n"
            << "wrote " << out_prefix << ".edges and " << out_prefix
            << ".clusters.json\n";
  return 0;
}

int cmd_clean(const std::string& input, const std::string& output,
              bool as_json) {
  CleanResult res = clean_directed_snapshot_file(input);
  save_edge_list_file(output, res.graph);
  GraphStats st = compute_stats(res.graph);
  if (as_json) {
    nlohmann::json j;
    j["nodes"] = st.nodes;
    j["edges"] = st.edges;
    j["negative_fraction"] = st.negative_fraction;
    j["mismatched_pairs_dropped"] = res.mismatched_pairs;
    j["reciprocal_pairs_collapsed"] = res.reciprocal_pairs;
    j["duplicate_lines"] = res.duplicate_lines;
    j["self_loops_dropped"] = res.self_loops;
    j["component_removed_nodes"] = res.component_removed_nodes;
    j["component_removed_edges"] = res.component_removed_edges;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "kept largest component: " << st.nodes << " nodes, "
              << st.edges << " edges, " << 100.0 * st.negative_fraction
              << "% negative\n"
              << "dropped: " << res.mismatched_pairs
              << " sign-mismatched pairs, " << res.self_loops
              << " self-loops, " << res.component_removed_nodes
              << " nodes / " << res.component_removed_edges
              << " edges outside the component\n"
              << "collapsed " << res.reciprocal_pairs
              << " reciprocal pairs, ignored " << res.duplicate_lines
              << " duplicate lines\n";
  }
  return 0;
}

int cmd_stats(const std::string& input, bool with_diameter, bool as_json,
              bool lcc_only) {
  SignedGraph g = load_edge_list_file(input).graph;
  if (lcc_only) g = largest_component(g).graph;
  GraphStats st = compute_stats(g, with_diameter);
  if (as_json) {
    nlohmann::json j;
    j["nodes"] = st.nodes;
    j["edges"] = st.edges;
    j["negative_fraction"] = st.negative_fraction;
    j["node_edge_ratio"] = st.query_fraction;
    j["avg_degree"] = st.avg_degree;
    if (st.diameter) j["diameter"] = *st.diameter;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "nodes:             " << st.nodes << '\n'
              << "edges:             " << st.edges << '\n'
              << "negative fraction: " << 100.0 * st.negative_fraction << "%\n"
              << "|V|/|E|:           " << 100.0 * st.query_fraction << "%\n"
              << "average degree:    " << st.avg_degree << '\n';
    if (st.diameter) std::cout << "diameter:          " << *st.diameter << '\n';
  }
  return 0;
}

int cmd_run(const ExperimentConfig& cfg, const std::string& out_dir) {
  ExperimentResult result = run_experiment(cfg);
  write_experiment_output(result, out_dir);
  if (!result.density_precondition_met)
    std::cerr << "warning: the graph is sparser than the query-budget "
                 "theorem assumes; budget/test-balance guarantees are off\n";
  std::cout << "graph: " << result.nodes << " nodes, " << result.edges
            << " edges\n"
            << "trials: " << result.trials.size() << " ok, "
            << result.failures.size() << " failed\n"
            << "mean mistakes: " << result.mean_mistakes
            << " (lower bound p|test| = " << result.mistake_lower_bound
            << ")\n"
            << "mean F-measure: " << result.mean_f << '\n'
            << "mean optimality factor: " << result.mean_optimality << '\n'
            << "max circuit length: " << result.max_circuit_overall << '\n'
            << "wrote " << out_dir << "/trials.csv and " << out_dir
            << "/summary.json\n";
  for (const auto& f : result.failures)
    std::cerr << "trial " << f.trial << " failed: " << f.message << '\n';
  return result.failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treelink - active edge-sign prediction on signed graphs via "
      "spanning-tree, treelet and star query selection"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand(
      "generate", "Random connected graph with a planted two-clustering");
  GeneratorSpec spec;
  std::string gen_out = "graph";
  gen->add_option("--nodes", spec.nodes, "node count")->required();
  gen->add_option("--edges", spec.target_edges, "edge count before pruning")
      ->required();
  gen->add_option("--split", spec.cluster_split,
                  "fraction of nodes in cluster 0 (default 0.5)");
  gen->add_option("--neg-target", spec.negative_fraction_target,
                  "target negative edge fraction (default 0)");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--out", gen_out,
                  "output prefix (writes <out>.edges, <out>.clusters.json)");

  // clean
  auto* clean = app.add_subcommand(
      "clean", "Directed snapshot -> undirected largest-component edge list");
  std::string clean_in, clean_out = "cleaned.edges";
  bool clean_json = false;
  clean->add_option("--input", clean_in, "directed edge list")->required();
  clean->add_option("--output", clean_out, "undirected edge list to write");
  clean->add_flag("--json", clean_json, "machine-readable stats on stdout");

  // stats
  auto* stats = app.add_subcommand("stats", "Summary statistics of an edge list");
  std::string stats_in;
  bool stats_diameter = false, stats_json = false, stats_lcc = false;
  stats->add_option("--input", stats_in, "edge list")->required();
  stats->add_flag("--diameter", stats_diameter,
                  "also compute the exact diameter (all-sources BFS)");
  stats->add_flag("--json", stats_json, "machine-readable output");
  stats->add_flag("--largest-component", stats_lcc,
                  "report on the largest connected component only");

  // run
  auto* run = app.add_subcommand("run", "Seeded Monte Carlo experiment");
  ExperimentConfig cfg;
  std::string algo = "treecutter", flip = "iid", order = "shuffled";
  std::string labels = "auto", positive = "minority";
  std::string graph_path, clustering_path;
  GeneratorSpec run_spec;
  bool have_gen = false;
  bool no_timing = false;
  std::string run_out = default_output_dir();
  run->add_option("--algorithm", algo,
                  "treecutter|starmaker|treeletstar|spanning-tree-only");
  run->add_option("--k", cfg.k, "treelet height parameter (default 3)");
  run->add_option("--p", cfg.p, "flip probability in [0, 1/2)");
  run->add_option("--flip-mode", flip, "iid|fact1 (default iid)");
  run->add_option("--trials", cfg.trials, "trial count (default 10)");
  run->add_option("--seed", cfg.master_seed, "master seed");
  run->add_option("--graph", graph_path, "edge-list input");
  run->add_option("--clustering", clustering_path,
                  "clustering sidecar for planted labels");
  auto* gn = run->add_option("--gen-nodes", run_spec.nodes, "generate: nodes");
  run->add_option("--gen-edges", run_spec.target_edges, "generate: edges");
  run->add_option("--gen-split", run_spec.cluster_split, "generate: split");
  run->add_option("--gen-neg", run_spec.negative_fraction_target,
                  "generate: negative fraction target");
  run->add_option("--gen-seed", run_spec.seed, "generate: seed");
  run->add_option("--labels", labels,
                  "planted|dataset (default: planted when a clustering or "
                  "generator is given, else dataset)");
  run->add_option("--order", order, "BFS neighbor order: shuffled|input");
  run->add_option("--positive-class", positive,
                  "F-measure positive class: minority|+1|-1");
  NodeId root = -1;
  auto* root_opt = run->add_option(
      "--root", root, "BFS root node id (default: highest-degree node)");
  run->add_option("--threads", cfg.threads, "parallel trial workers");
  run->add_flag("--no-timing", no_timing,
                "write 0 for elapsed_ms (byte-stable outputs)");
  run->add_flag("--largest-component", cfg.largest_component_only,
                "run on the largest connected component of the input");
  run->add_option("--output", run_out,
                  "output directory (default $TREELINK_OUT or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(spec, gen_out);
    if (clean->parsed()) return cmd_clean(clean_in, clean_out, clean_json);
    if (stats->parsed())
      return cmd_stats(stats_in, stats_diameter, stats_json, stats_lcc);

    // run
    cfg.algorithm = algorithm_from_name(algo);
    cfg.flip_mode = flip_mode_from_name(flip);
    if (order == "shuffled")
      cfg.order = NeighborOrder::shuffled;
    else if (order == "input")
      cfg.order = NeighborOrder::input;
    else
      throw std::invalid_argument("unknown order '" + order + "'");
    if (positive == "+1")
      cfg.positive_class = Sign::positive;
    else if (positive == "-1")
      cfg.positive_class = Sign::negative;
    else if (positive != "minority")
      throw std::invalid_argument("unknown positive class '" + positive + "'");
    have_gen = gn->count() > 0;
    if (have_gen) cfg.generator = run_spec;
    if (root_opt->count() > 0) cfg.root = root;
    if (!graph_path.empty()) cfg.graph_path = graph_path;
    if (!clustering_path.empty()) cfg.clustering_path = clustering_path;
    if (labels == "planted")
      cfg.labels = LabelSource::planted;
    else if (labels == "dataset")
      cfg.labels = LabelSource::dataset;
    else if (labels == "auto")
      cfg.labels = (have_gen || !clustering_path.empty())
                       ? LabelSource::planted
                       : LabelSource::dataset;
    else
      throw std::invalid_argument("unknown label source '" + labels + "'");
    cfg.timing = !no_timing;
    return cmd_run(cfg, run_out);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
}
