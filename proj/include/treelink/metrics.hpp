#pragma once

#include <optional>
#include <span>

#include "treelink/graph.hpp"
#include "treelink/types.hpp"

namespace treelink {

/// Harmonic mean of precision and recall for the designated positive class;
/// 0 when precision + recall is 0. Throws on length mismatch or empty input.
double f_measure(std::span<const Sign> predicted, std::span<const Sign> truth,
                 Sign positive_class);

/// The class with fewer occurrences; ties go to negative.
Sign minority_class(std::span<const Sign> truth);

struct GraphStats {
  NodeId nodes = 0;
  EdgeId edges = 0;
  double negative_fraction = 0.0;  // 0 when unlabeled
  double query_fraction = 0.0;     // |V|/|E|
  double avg_degree = 0.0;
  std::optional<int> diameter;
};

GraphStats compute_stats(const SignedGraph& g, bool with_diameter = false);

}  // namespace treelink
