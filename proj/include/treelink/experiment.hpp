#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treelink/generator.hpp"
#include "treelink/graph.hpp"
#include "treelink/labeling.hpp"
#include "treelink/prediction.hpp"
#include "treelink/tree.hpp"
#include "treelink/types.hpp"

namespace treelink {

enum class Algorithm { treecutter, starmaker, treeletstar, spanning_tree };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

enum class LabelSource { planted, dataset };

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::treecutter;
  int k = 3;
  double p = 0.0;
  FlipMode flip_mode = FlipMode::iid;
  int trials = 10;
  std::uint64_t master_seed = 1;
  LabelSource labels = LabelSource::planted;
  NeighborOrder order = NeighborOrder::shuffled;
  std::optional<Sign> positive_class;  // unset: minority class of the truth
  std::optional<NodeId> root;          // unset: highest-degree node
  int threads = 1;
  bool timing = true;  // false zeroes elapsed_ms for byte-stable outputs

  // Exactly one input: a graph file (clustering sidecar required for planted
  // labels) or a generator spec.
  std::optional<std::string> graph_path;
  std::optional<std::string> clustering_path;
  std::optional<GeneratorSpec> generator;
  // Reduce a loaded graph to its largest connected component first.
  // Incompatible with a clustering sidecar (node ids shift).
  bool largest_component_only = false;
};

struct TrialResult {
  int trial = 0;
  std::int64_t mistakes = 0;
  std::int64_t test_count = 0;
  std::int64_t query_count = 0;
  double f_measure = 0.0;
  int max_circuit = 0;
  double mean_circuit = 0.0;
  double elapsed_ms = 0.0;
  double optimality_factor = 0.0;
};

struct TrialFailure {
  int trial = 0;
  std::string message;
};

struct ExperimentResult {
  ExperimentConfig config;
  NodeId nodes = 0;
  EdgeId edges = 0;
  // Theorem-style density requirement |E| >= f(|V|, k) for the chosen
  // algorithm; runs proceed regardless, with a warning when unmet.
  bool density_precondition_met = true;
  std::vector<TrialResult> trials;
  std::vector<TrialFailure> failures;

  double mean_mistakes = 0.0, stddev_mistakes = 0.0;
  double mean_f = 0.0, stddev_f = 0.0;
  double mean_optimality = 0.0, stddev_optimality = 0.0;
  double mean_test_count = 0.0, mean_query_count = 0.0;
  double mistake_lower_bound = 0.0;  // p * mean test count
  int max_circuit_overall = 0;
  double mean_elapsed_ms = 0.0;
};

/// Runs every trial behind a counting oracle and scores against the hidden
/// truth. Trials are independent and may run on several threads; results are
/// merged by trial index, so the output never depends on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Fixed-column CSV: trial,mistakes,test_count,query_count,f_measure,
/// max_circuit,mean_circuit,elapsed_ms,optimality_factor.
void write_trials_csv(std::ostream& out, const ExperimentResult& result);
void write_summary_json(std::ostream& out, const ExperimentResult& result);

/// Writes trials.csv and summary.json into `dir`.
void write_experiment_output(const ExperimentResult& result,
                             const std::string& dir);

TwoClustering load_clustering_json(const std::string& path);
void save_clustering_json(const std::string& path, const TwoClustering& c,
                          const GeneratorSpec* spec);

/// Sidecar metadata for a serialized label assignment.
std::string assignment_sidecar_json(const LabelAssignment& a, FlipMode mode,
                                    std::uint64_t seed);

}  // namespace treelink
