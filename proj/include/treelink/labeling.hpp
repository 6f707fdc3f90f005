#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treelink/graph.hpp"
#include "treelink/types.hpp"

namespace treelink {

/// Bipartition of the node set. Either side may be empty.
struct TwoClustering {
  std::vector<std::uint8_t> side;  // 0 or 1 per node
};

TwoClustering uniform_random_clustering(NodeId node_count, Rng& rng);
/// First round(ratio * n) nodes on side 0, the rest on side 1.
TwoClustering split_clustering(NodeId node_count, double ratio);

enum class FlipMode { iid, fact1 };

const char* flip_mode_name(FlipMode m);
FlipMode flip_mode_from_name(const std::string& name);

/// Ground-truth edge labels: a consistent base labeling plus a record of
/// which edges were flipped.
struct LabelAssignment {
  TwoClustering base;
  std::vector<Sign> realized;
  std::vector<char> flipped;
  double p = 0.0;
  EdgeId fact1_selected = 0;  // edges drawn for re-signing (fact1 mode only)

  EdgeId flipped_count() const;
};

/// Within-cluster edges positive, between-cluster edges negative; no flips.
LabelAssignment consistent_labels(const SignedGraph& g,
                                  const TwoClustering& c);

/// Perturbs a consistent assignment. iid: every edge flips independently
/// with probability p. fact1: floor(2p|E|) edges drawn uniformly without
/// replacement are each re-signed by a fair coin. Requires 0 <= p < 1/2.
LabelAssignment p_stochastic_flip(const LabelAssignment& base, double p,
                                  FlipMode mode, Rng& rng);

/// Expected-mistake floor p * |test set| for any learner under these labels.
double lower_bound_mistakes(double p, std::int64_t test_count);

}  // namespace treelink
