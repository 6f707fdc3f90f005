#include "treelink/prediction.hpp"

namespace treelink {

std::int64_t count_mistakes(const PredictionRecord& r,
                            std::span<const Sign> truth) {
  std::int64_t mistakes = 0;
  for (EdgeId e : r.partition.test_edges)
    if (r.predicted[e] != truth[e]) ++mistakes;
  return mistakes;
}

bool same_predictions(const PredictionRecord& a, const PredictionRecord& b) {
  if (a.partition.query_edges != b.partition.query_edges) return false;
  if (a.partition.test_edges != b.partition.test_edges) return false;
  if (a.role != b.role) return false;
  if (a.circuit_len != b.circuit_len) return false;
  for (EdgeId e : a.partition.test_edges)
    if (a.predicted[e] != b.predicted[e]) return false;
  return true;
}

}  // namespace treelink
