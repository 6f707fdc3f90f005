#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "treelink/graph.hpp"

namespace treelink {

struct CleanResult {
  SignedGraph graph;  // largest component of the undirected remainder
  std::int64_t mismatched_pairs = 0;   // conflicting signs, dropped entirely
  std::int64_t reciprocal_pairs = 0;   // both directions agree, collapsed
  std::int64_t duplicate_lines = 0;    // repeats of an already-seen arc
  std::int64_t self_loops = 0;
  NodeId component_removed_nodes = 0;
  EdgeId component_removed_edges = 0;
};

/// Turns a directed signed edge list into an undirected graph: node pairs
/// whose arcs disagree on sign are dropped, agreeing reciprocal arcs
/// collapse to one edge, and only the largest connected component survives.
CleanResult clean_directed_snapshot(std::istream& in);
CleanResult clean_directed_snapshot_file(const std::string& path);

}  // namespace treelink
