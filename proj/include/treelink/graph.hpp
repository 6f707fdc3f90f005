#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treelink/types.hpp"

namespace treelink {

struct Edge {
  NodeId u = -1;
  NodeId v = -1;

  NodeId other(NodeId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  NodeId node = -1;
  EdgeId edge = -1;
};

/// Undirected simple graph with optional per-edge sign labels.
///
/// Node ids are dense 0..node_count-1. Edges are stored canonically as
/// (min(u,v), max(u,v)) in insertion order; adjacency lists follow edge
/// insertion order. Immutable after construction.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(NodeId node_count, std::vector<Edge> edges,
              std::vector<Sign> labels = {},
              std::vector<std::int64_t> original_ids = {});

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  NodeId degree(NodeId v) const {
    return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_labels() const { return !labels_.empty(); }
  Sign label(EdgeId e) const { return labels_[e]; }
  const std::vector<Sign>& labels() const { return labels_; }

  /// Original id of a node as it appeared in the input file (identity when
  /// the graph was built programmatically).
  std::int64_t original_id(NodeId v) const {
    return original_ids_.empty() ? v : original_ids_[v];
  }
  const std::vector<std::int64_t>& original_ids() const {
    return original_ids_;
  }

  /// Topology-only copy; used to hand a graph to a learner without exposing
  /// any label to it.
  SignedGraph without_labels() const;

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Sign> labels_;
  std::vector<std::int64_t> original_ids_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

struct LoadResult {
  SignedGraph graph;
  int duplicate_edges = 0;  // repeated pairs with matching signs, dropped
  int self_loops = 0;       // dropped
};

/// Parses whitespace-separated "u v s" lines with s in {+1, -1, 1}.
/// Lines starting with '#' are comments. Throws on malformed lines (with the
/// line number) and on duplicate edges with conflicting signs.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::string& path);

/// Writes the graph back out using original node ids; round-trips through
/// load_edge_list. The overload writes the given signs instead of the
/// graph's own labels (e.g. a realized label assignment).
void save_edge_list(std::ostream& out, const SignedGraph& g);
void save_edge_list(std::ostream& out, const SignedGraph& g,
                    std::span<const Sign> signs);
void save_edge_list_file(const std::string& path, const SignedGraph& g);

/// First node unreachable from node 0, if any.
std::optional<NodeId> first_unreachable(const SignedGraph& g);
bool is_connected(const SignedGraph& g);
void require_connected(const SignedGraph& g, const char* who);

struct ComponentExtraction {
  SignedGraph graph;
  NodeId removed_nodes = 0;
  EdgeId removed_edges = 0;
};

/// Keeps the largest connected component (ties broken by smallest contained
/// node id) and remaps ids densely, preserving original ids.
ComponentExtraction largest_component(const SignedGraph& g);

/// Exact diameter via all-sources BFS. Reporting/test use; not on any
/// prediction path.
int graph_diameter(const SignedGraph& g);

}  // namespace treelink
