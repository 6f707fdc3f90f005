#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "treelink/types.hpp"

namespace treelink {

/// Gatekeeper between a learner and the hidden edge labels. Labels come out
/// only through reveal(); seal() ends the query phase, after which any
/// further reveal is a contract violation.
class SignOracle {
 public:
  explicit SignOracle(std::span<const Sign> truth)
      : truth_(truth), seen_(truth.size(), 0) {}

  Sign reveal(EdgeId e) {
    if (sealed_)
      throw std::logic_error("SignOracle: reveal after seal");
    if (e < 0 || static_cast<std::size_t>(e) >= truth_.size())
      throw std::out_of_range("SignOracle: edge id out of range");
    ++calls_;
    if (!seen_[e]) {
      seen_[e] = 1;
      ++distinct_;
    }
    return truth_[e];
  }

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  std::int64_t reveal_count() const { return distinct_; }
  std::int64_t call_count() const { return calls_; }
  bool revealed(EdgeId e) const { return seen_[e] != 0; }

 private:
  std::span<const Sign> truth_;
  std::vector<char> seen_;
  std::int64_t distinct_ = 0;
  std::int64_t calls_ = 0;
  bool sealed_ = false;
};

}  // namespace treelink
