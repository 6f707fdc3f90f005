#include "treelink/cleaning.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "edge_list_parser.hpp"

namespace treelink {

CleanResult clean_directed_snapshot(std::istream& in) {
  CleanResult result;

  std::unordered_map<std::int64_t, NodeId> id_map;
  std::vector<std::int64_t> original_ids;
  auto dense = [&](std::int64_t orig) {
    auto [it, inserted] =
        id_map.emplace(orig, static_cast<NodeId>(original_ids.size()));
    if (inserted) original_ids.push_back(orig);
    return it->second;
  };

  struct PairState {
    bool pos = false, neg = false;
    bool forward = false, backward = false;  // u<v direction, v<u direction
  };
  std::unordered_map<std::uint64_t, PairState> pairs;
  std::vector<std::uint64_t> pair_order;  // first-seen order, keeps output deterministic

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::ParsedLine p;
    if (!detail::parse_edge_line(raw, line_no, p)) continue;
    if (p.u == p.v) {
      ++result.self_loops;
      continue;
    }
    NodeId a = dense(p.u), b = dense(p.v);
    const bool forward = a < b;
    std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
        static_cast<std::uint32_t>(std::max(a, b));
    auto [it, inserted] = pairs.emplace(key, PairState{});
    if (inserted) pair_order.push_back(key);
    PairState& st = it->second;
    bool& dir = forward ? st.forward : st.backward;
    if (dir) ++result.duplicate_lines;
    dir = true;
    (p.sign == Sign::positive ? st.pos : st.neg) = true;
  }

  std::vector<Edge> edges;
  std::vector<Sign> labels;
  for (std::uint64_t key : pair_order) {
    const PairState& st = pairs.at(key);
    if (st.pos && st.neg) {
      ++result.mismatched_pairs;
      continue;
    }
    if (st.forward && st.backward) ++result.reciprocal_pairs;
    edges.push_back(Edge{static_cast<NodeId>(key >> 32),
                         static_cast<NodeId>(key & 0xffffffffu)});
    labels.push_back(st.pos ? Sign::positive : Sign::negative);
  }
  if (edges.empty())
    throw std::runtime_error("clean: no edges survive sign-mismatch removal");

  const auto node_count = static_cast<NodeId>(original_ids.size());
  SignedGraph full(node_count, std::move(edges), std::move(labels),
                   std::move(original_ids));
  ComponentExtraction comp = largest_component(full);
  result.graph = std::move(comp.graph);
  result.component_removed_nodes = comp.removed_nodes;
  result.component_removed_edges = comp.removed_edges;
  return result;
}

CleanResult clean_directed_snapshot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return clean_directed_snapshot(in);
}

}  // namespace treelink
