#include "treelink/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "treelink/metrics.hpp"
#include "treelink/oracle.hpp"
#include "treelink/starmaker.hpp"
#include "treelink/treecutter.hpp"
#include "treelink/treeletstar.hpp"

namespace treelink {

using nlohmann::json;

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::treecutter: return "treecutter";
    case Algorithm::starmaker: return "starmaker";
    case Algorithm::treeletstar: return "treeletstar";
    case Algorithm::spanning_tree: return "spanning-tree-only";
  }
  return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "treecutter") return Algorithm::treecutter;
  if (name == "starmaker") return Algorithm::starmaker;
  if (name == "treeletstar") return Algorithm::treeletstar;
  if (name == "spanning-tree-only") return Algorithm::spanning_tree;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

PredictionRecord dispatch(Algorithm a, const SignedGraph& g,
                          SignOracle& oracle, int k,
                          const LearnerOptions& opts, Rng& rng) {
  switch (a) {
    case Algorithm::treecutter: return run_treecutter(g, oracle, k, opts, rng);
    case Algorithm::starmaker: return run_starmaker(g, oracle);
    case Algorithm::treeletstar:
      return run_treeletstar(g, oracle, k, opts, rng);
    case Algorithm::spanning_tree:
      return run_spanning_tree(g, oracle, opts, rng);
  }
  throw std::logic_error("bad algorithm");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.p < 0.0 || cfg.p >= 0.5)
    throw std::invalid_argument("p must satisfy 0 <= p < 1/2");
  if ((cfg.algorithm == Algorithm::treecutter ||
       cfg.algorithm == Algorithm::treeletstar) &&
      cfg.k < 2)
    throw std::invalid_argument("k must be >= 2");
  if (cfg.root && *cfg.root < 0)
    throw std::invalid_argument("root must be a node id");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
  const int inputs = (cfg.graph_path ? 1 : 0) + (cfg.generator ? 1 : 0);
  if (inputs != 1)
    throw std::invalid_argument("exactly one of graph path / generator spec required");
  if (cfg.labels == LabelSource::dataset && cfg.p != 0.0)
    throw std::invalid_argument("dataset labels cannot be combined with p > 0");
  if (cfg.labels == LabelSource::dataset && cfg.generator)
    throw std::invalid_argument("generator input requires planted labels");
  if (cfg.labels == LabelSource::planted && cfg.graph_path &&
      !cfg.clustering_path)
    throw std::invalid_argument(
        "planted labels on a loaded graph need a clustering sidecar");
  if (cfg.largest_component_only && cfg.clustering_path)
    throw std::invalid_argument(
        "largest-component extraction invalidates a clustering sidecar");
}

struct Stats {
  double mean = 0.0, stddev = 0.0;
};

template <class Get>
Stats summarize(const std::vector<TrialResult>& trials, Get get) {
  Stats s;
  if (trials.empty()) return s;
  double sum = 0.0;
  for (const auto& t : trials) sum += get(t);
  s.mean = sum / double(trials.size());
  if (trials.size() > 1) {
    double ss = 0.0;
    for (const auto& t : trials) {
      double d = get(t) - s.mean;
      ss += d * d;
    }
    s.stddev = std::sqrt(ss / double(trials.size() - 1));
  }
  return s;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);

  SignedGraph labeled;
  TwoClustering clustering;
  if (cfg.generator) {
    GeneratedGraph gen = generate_planted_graph(*cfg.generator);
    labeled = std::move(gen.graph);
    clustering = std::move(gen.clustering);
  } else {
    labeled = load_edge_list_file(*cfg.graph_path).graph;
    if (cfg.largest_component_only)
      labeled = largest_component(labeled).graph;
    if (cfg.clustering_path) {
      clustering = load_clustering_json(*cfg.clustering_path);
      if (clustering.side.size() !=
          static_cast<std::size_t>(labeled.node_count()))
        throw std::invalid_argument("clustering sidecar does not match graph");
    }
  }
  require_connected(labeled, "run_experiment");
  if (cfg.labels == LabelSource::dataset && !labeled.has_labels())
    throw std::invalid_argument("dataset labels requested but graph has none");

  const SignedGraph topology = labeled.without_labels();

  // Per-trial truths derive from one consistent base (planted) or from the
  // file labels (dataset).
  std::optional<LabelAssignment> planted_base;
  std::optional<LabelAssignment> dataset_truth;
  if (cfg.labels == LabelSource::planted) {
    planted_base = consistent_labels(topology, clustering);
  } else {
    LabelAssignment a;
    a.realized = labeled.labels();
    a.flipped.assign(labeled.edge_count(), 0);
    dataset_truth = std::move(a);
  }

  ExperimentResult result;
  result.config = cfg;
  result.nodes = topology.node_count();
  result.edges = topology.edge_count();
  {
    const double nv = topology.node_count();
    const double ne = topology.edge_count();
    switch (cfg.algorithm) {
      case Algorithm::treecutter:
        result.density_precondition_met =
            ne >= 2.0 * nv - 2.0 + nv * nv / (double(cfg.k) * cfg.k) +
                      nv / cfg.k;
        break;
      case Algorithm::starmaker:
        result.density_precondition_met =
            ne >= 2.0 * nv - 2.0 + 2.0 * std::pow(nv, 1.5);
        break;
      case Algorithm::treeletstar:
        result.density_precondition_met =
            ne >= 2.0 * nv - 2.0 +
                      2.0 * std::pow((nv - 1.0) / cfg.k + 1.0, 1.5);
        break;
      case Algorithm::spanning_tree:
        result.density_precondition_met = true;
        break;
    }
  }
  result.trials.resize(cfg.trials);
  std::vector<std::optional<TrialFailure>> failures(cfg.trials);

  auto run_trial = [&](int trial) {
    const std::uint64_t trial_seed = derive_seed(cfg.master_seed, trial);
    Rng label_rng(derive_seed(trial_seed, 1));
    Rng algo_rng(derive_seed(trial_seed, 2));

    LabelAssignment truth =
        planted_base
            ? p_stochastic_flip(*planted_base, cfg.p, cfg.flip_mode, label_rng)
            : *dataset_truth;
    SignOracle oracle(truth.realized);
    LearnerOptions opts;
    opts.order = cfg.order;
    opts.root = cfg.root;

    const auto t0 = std::chrono::steady_clock::now();
    PredictionRecord rec =
        dispatch(cfg.algorithm, topology, oracle, cfg.k, opts, algo_rng);
    const auto t1 = std::chrono::steady_clock::now();

    TrialResult& out = result.trials[trial];
    out.trial = trial;
    out.query_count = static_cast<std::int64_t>(rec.partition.query_edges.size());
    out.test_count = static_cast<std::int64_t>(rec.partition.test_edges.size());
    if (!oracle.sealed() || oracle.reveal_count() != out.query_count)
      throw std::logic_error("query accounting mismatch");
    if (out.query_count + out.test_count != topology.edge_count())
      throw std::logic_error("partition does not cover the edge set");

    out.mistakes = count_mistakes(rec, truth.realized);
    std::vector<Sign> pred, actual;
    pred.reserve(rec.partition.test_edges.size());
    actual.reserve(rec.partition.test_edges.size());
    for (EdgeId e : rec.partition.test_edges) {
      pred.push_back(rec.predicted[e]);
      actual.push_back(truth.realized[e]);
    }
    if (!actual.empty()) {
      Sign positive = cfg.positive_class.value_or(minority_class(actual));
      out.f_measure = f_measure(pred, actual, positive);
    } else {
      out.f_measure = 1.0;
    }
    out.max_circuit = rec.max_circuit;
    out.mean_circuit = rec.mean_circuit;
    out.elapsed_ms =
        cfg.timing
            ? std::chrono::duration<double, std::milli>(t1 - t0).count()
            : 0.0;
    out.optimality_factor =
        double(out.mistakes) / std::max(1.0, cfg.p * double(out.test_count));
  };

  auto worker = [&](int first) {
    for (int t = first; t < cfg.trials; t += cfg.threads) {
      try {
        run_trial(t);
      } catch (const std::exception& ex) {
        failures[t] = TrialFailure{t, ex.what()};
      }
    }
  };
  if (cfg.threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.threads);
    for (int i = 0; i < cfg.threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }

  for (auto& f : failures)
    if (f) result.failures.push_back(*f);
  if (!result.failures.empty()) {
    std::vector<TrialResult> ok;
    for (int t = 0; t < cfg.trials; ++t)
      if (!failures[t]) ok.push_back(result.trials[t]);
    result.trials = std::move(ok);
  }

  auto mk = summarize(result.trials, [](const TrialResult& t) {
    return double(t.mistakes);
  });
  result.mean_mistakes = mk.mean;
  result.stddev_mistakes = mk.stddev;
  auto f = summarize(result.trials,
                     [](const TrialResult& t) { return t.f_measure; });
  result.mean_f = f.mean;
  result.stddev_f = f.stddev;
  auto opt = summarize(result.trials,
                       [](const TrialResult& t) { return t.optimality_factor; });
  result.mean_optimality = opt.mean;
  result.stddev_optimality = opt.stddev;
  result.mean_test_count =
      summarize(result.trials, [](const TrialResult& t) {
        return double(t.test_count);
      }).mean;
  result.mean_query_count =
      summarize(result.trials, [](const TrialResult& t) {
        return double(t.query_count);
      }).mean;
  result.mistake_lower_bound = cfg.p * result.mean_test_count;
  for (const auto& t : result.trials)
    result.max_circuit_overall = std::max(result.max_circuit_overall, t.max_circuit);
  result.mean_elapsed_ms =
      summarize(result.trials, [](const TrialResult& t) {
        return t.elapsed_ms;
      }).mean;
  return result;
}

void write_trials_csv(std::ostream& out, const ExperimentResult& result) {
  out << "trial,mistakes,test_count,query_count,f_measure,max_circuit,"
         "mean_circuit,elapsed_ms,optimality_factor\n";
  char buf[256];
  for (const auto& t : result.trials) {
    std::snprintf(buf, sizeof(buf), "%d,%lld,%lld,%lld,%.6f,%d,%.4f,%.3f,%.6f\n",
                  t.trial, static_cast<long long>(t.mistakes),
                  static_cast<long long>(t.test_count),
                  static_cast<long long>(t.query_count), t.f_measure,
                  t.max_circuit, t.mean_circuit, t.elapsed_ms,
                  t.optimality_factor);
    out << buf;
  }
}

namespace {

json config_json(const ExperimentConfig& cfg) {
  json j;
  j["algorithm"] = algorithm_name(cfg.algorithm);
  if (cfg.algorithm == Algorithm::treecutter ||
      cfg.algorithm == Algorithm::treeletstar)
    j["k"] = cfg.k;
  j["p"] = cfg.p;
  j["flip_mode"] = flip_mode_name(cfg.flip_mode);
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["labels"] = cfg.labels == LabelSource::planted ? "planted" : "dataset";
  j["order"] = cfg.order == NeighborOrder::shuffled ? "shuffled" : "input";
  j["positive_class"] =
      cfg.positive_class ? sign_token(*cfg.positive_class) : "minority";
  if (cfg.root) j["root"] = *cfg.root;
  j["threads"] = cfg.threads;
  j["timing"] = cfg.timing;
  if (cfg.graph_path) j["graph"] = *cfg.graph_path;
  if (cfg.clustering_path) j["clustering"] = *cfg.clustering_path;
  if (cfg.generator) {
    j["generator"] = {{"nodes", cfg.generator->nodes},
                      {"target_edges", cfg.generator->target_edges},
                      {"cluster_split", cfg.generator->cluster_split},
                      {"negative_fraction_target",
                       cfg.generator->negative_fraction_target},
                      {"seed", cfg.generator->seed}};
  }
  return j;
}

}  // namespace

void write_summary_json(std::ostream& out, const ExperimentResult& result) {
  json j;
  j["config"] = config_json(result.config);
  j["graph"] = {{"nodes", result.nodes},
                {"edges", result.edges},
                {"density_precondition_met", result.density_precondition_met}};
  json s;
  s["trials_completed"] = result.trials.size();
  s["mean_mistakes"] = result.mean_mistakes;
  s["stddev_mistakes"] = result.stddev_mistakes;
  s["mean_f_measure"] = result.mean_f;
  s["stddev_f_measure"] = result.stddev_f;
  s["mean_optimality_factor"] = result.mean_optimality;
  s["stddev_optimality_factor"] = result.stddev_optimality;
  s["mean_test_count"] = result.mean_test_count;
  s["mean_query_count"] = result.mean_query_count;
  s["mistake_lower_bound"] = result.mistake_lower_bound;
  s["max_circuit"] = result.max_circuit_overall;
  s["mean_elapsed_ms"] = result.config.timing ? result.mean_elapsed_ms : 0.0;
  j["summary"] = s;
  json fails = json::array();
  for (const auto& f : result.failures)
    fails.push_back({{"trial", f.trial}, {"message", f.message}});
  j["failures"] = fails;
  out << j.dump(2) << '\n';
}

void write_experiment_output(const ExperimentResult& result,
                             const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(std::filesystem::path(dir) / "trials.csv");
  if (!csv) throw std::runtime_error("cannot write trials.csv in '" + dir + "'");
  write_trials_csv(csv, result);
  std::ofstream js(std::filesystem::path(dir) / "summary.json");
  if (!js) throw std::runtime_error("cannot write summary.json in '" + dir + "'");
  write_summary_json(js, result);
}

TwoClustering load_clustering_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j = json::parse(in);
  TwoClustering c;
  for (const auto& v : j.at("sides"))
    c.side.push_back(v.get<int>() ? 1 : 0);
  return c;
}

void save_clustering_json(const std::string& path, const TwoClustering& c,
                          const GeneratorSpec* spec) {
  json j;
  j["nodes"] = c.side.size();
  json sides = json::array();
  for (auto s : c.side) sides.push_back(int(s));
  j["sides"] = sides;
  if (spec) {
    j["generator"] = {{"nodes", spec->nodes},
                      {"target_edges", spec->target_edges},
                      {"cluster_split", spec->cluster_split},
                      {"negative_fraction_target",
                       spec->negative_fraction_target},
                      {"seed", spec->seed}};
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string assignment_sidecar_json(const LabelAssignment& a, FlipMode mode,
                                    std::uint64_t seed) {
  json j;
  j["p"] = a.p;
  j["mode"] = flip_mode_name(mode);
  j["seed"] = seed;
  j["flipped_count"] = a.flipped_count();
  return j.dump(2);
}

}  // namespace treelink
