#pragma once

#include <cstdint>
#include <random>

namespace treelink {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Rng = std::mt19937_64;

/// Edge label. Stored as a two-valued enumeration; text I/O uses "+1"/"-1".
enum class Sign : std::int8_t { negative = -1, positive = +1 };

constexpr int sign_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign& operator*=(Sign& a, Sign b) {
  a = a * b;
  return a;
}
constexpr Sign opposite(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr const char* sign_token(Sign s) {
  return s == Sign::positive ? "+1" : "-1";
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent per-trial seed stream derived from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

}  // namespace treelink
