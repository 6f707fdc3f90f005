#include "treelink/metrics.hpp"

#include <stdexcept>

namespace treelink {

double f_measure(std::span<const Sign> predicted, std::span<const Sign> truth,
                 Sign positive_class) {
  if (predicted.size() != truth.size())
    throw std::invalid_argument("f_measure: length mismatch");
  if (predicted.empty()) throw std::invalid_argument("f_measure: empty input");
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool pred_pos = predicted[i] == positive_class;
    const bool true_pos = truth[i] == positive_class;
    if (pred_pos && true_pos) ++tp;
    if (pred_pos && !true_pos) ++fp;
    if (!pred_pos && true_pos) ++fn;
  }
  const double precision = tp + fp == 0 ? 0.0 : double(tp) / double(tp + fp);
  const double recall = tp + fn == 0 ? 0.0 : double(tp) / double(tp + fn);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Sign minority_class(std::span<const Sign> truth) {
  std::int64_t neg = 0;
  for (Sign s : truth)
    if (s == Sign::negative) ++neg;
  const auto pos = static_cast<std::int64_t>(truth.size()) - neg;
  return neg <= pos ? Sign::negative : Sign::positive;
}

GraphStats compute_stats(const SignedGraph& g, bool with_diameter) {
  GraphStats st;
  st.nodes = g.node_count();
  st.edges = g.edge_count();
  if (g.has_labels()) {
    std::int64_t neg = 0;
    for (Sign s : g.labels())
      if (s == Sign::negative) ++neg;
    st.negative_fraction =
        g.edge_count() == 0 ? 0.0 : double(neg) / double(g.edge_count());
  }
  st.query_fraction =
      g.edge_count() == 0 ? 0.0 : double(g.node_count()) / double(g.edge_count());
  st.avg_degree = g.node_count() == 0
                      ? 0.0
                      : 2.0 * double(g.edge_count()) / double(g.node_count());
  if (with_diameter) st.diameter = graph_diameter(g);
  return st;
}

}  // namespace treelink
