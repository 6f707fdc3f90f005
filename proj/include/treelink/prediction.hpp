#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "treelink/types.hpp"

namespace treelink {

enum class EdgeRole : std::uint8_t {
  unassigned,
  backbone_query,   // tree/star edge inside a unit
  connector_query,  // the one queried edge joining a unit pair
  within_test,      // test edge with both endpoints in one unit
  cross_test,       // test edge joining two units
};

inline bool is_query(EdgeRole r) {
  return r == EdgeRole::backbone_query || r == EdgeRole::connector_query;
}
inline bool is_test(EdgeRole r) {
  return r == EdgeRole::within_test || r == EdgeRole::cross_test;
}

struct EdgePartition {
  std::vector<EdgeId> query_edges;
  std::vector<EdgeId> test_edges;
};

/// Post-run access to the circuit each test edge was predicted with: the
/// queried path joining the test edge's endpoints, in order from u to v.
class CircuitModel {
 public:
  virtual ~CircuitModel() = default;
  virtual std::vector<EdgeId> circuit_edges(EdgeId test_edge) const = 0;
};

struct PredictionRecord {
  EdgePartition partition;
  std::vector<EdgeRole> role;    // per edge
  std::vector<Sign> predicted;   // per edge; meaningful on test edges
  std::vector<int> circuit_len;  // per edge; 0 on query edges
  int max_circuit = 0;
  double mean_circuit = 0.0;
  bool density_precondition_met = true;
  bool query_bound_ok = true;
  // Borrows the graph it was built from; do not outlive it.
  std::shared_ptr<const CircuitModel> circuits;
};

std::int64_t count_mistakes(const PredictionRecord& r,
                            std::span<const Sign> truth);

/// True when partitions, roles, predictions on test edges, and circuit
/// lengths all coincide.
bool same_predictions(const PredictionRecord& a, const PredictionRecord& b);

}  // namespace treelink
