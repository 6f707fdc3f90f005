#pragma once

#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "treelink/types.hpp"

namespace treelink {

/// Binary max-heap over nodes keyed by static degree, with lazy deletion:
/// nodes marked not-in-use stay in the heap and are discarded without effect
/// when they surface at the top. Keys never change after construction.
/// Ties break towards the smaller node id.
class MaxDegreeHeap {
 public:
  explicit MaxDegreeHeap(std::span<const NodeId> degree)
      : degree_(degree.begin(), degree.end()), in_use_(degree.size(), 1) {
    heap_.resize(degree_.size());
    std::iota(heap_.begin(), heap_.end(), 0);
    for (auto i = static_cast<std::ptrdiff_t>(heap_.size()) / 2 - 1; i >= 0;
         --i)
      sift_down(static_cast<std::size_t>(i));
  }

  /// Highest-degree node still in use, removed from the heap; nullopt once
  /// every node has been used up.
  std::optional<NodeId> pop_max() {
    while (!heap_.empty()) {
      NodeId top = heap_.front();
      heap_.front() = heap_.back();
      heap_.pop_back();
      if (!heap_.empty()) sift_down(0);
      if (in_use_[top]) {
        in_use_[top] = 0;
        return top;
      }
    }
    return std::nullopt;
  }

  void mark_not_in_use(NodeId v) { in_use_[v] = 0; }
  bool in_use(NodeId v) const { return in_use_[v] != 0; }
  NodeId key(NodeId v) const { return degree_[v]; }
  std::size_t pending() const { return heap_.size(); }

 private:
  bool higher(NodeId a, NodeId b) const {
    if (degree_[a] != degree_[b]) return degree_[a] > degree_[b];
    return a < b;
  }

  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t l = 2 * i + 1, r = 2 * i + 2, best = i;
      if (l < n && higher(heap_[l], heap_[best])) best = l;
      if (r < n && higher(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      std::swap(heap_[i], heap_[best]);
      i = best;
    }
  }

  std::vector<NodeId> degree_;
  std::vector<char> in_use_;
  std::vector<NodeId> heap_;
};

}  // namespace treelink
