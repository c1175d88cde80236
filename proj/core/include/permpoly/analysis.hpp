#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "permpoly/poly.hpp"

namespace permpoly {

/// Two distinct preimages with the same image, smallest pair in index order.
struct Collision {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t image = 0;
  friend bool operator==(const Collision&, const Collision&) = default;
};

struct PermCheck {
  bool is_permutation = false;
  std::optional<Collision> witness;  // present iff not a permutation
};

/// True iff the table's images are pairwise distinct; otherwise the first
/// collision found scanning preimages in ascending order.
PermCheck check_permutation(const ValueTable& t);

struct LevelFailure {
  std::uint32_t k = 0;  // first multiplier for which f + k*x fails
  Collision collision;
};

/// Verdict of the completeness sweep. level is the largest k in [0, p-1]
/// such that f + i*x is a permutation for all 0 <= i <= k, or -1 when f
/// itself is not a permutation.
struct PermReport {
  bool is_permutation = false;
  std::optional<Collision> collision_witness;  // when f itself fails
  int level = -1;
  std::optional<LevelFailure> level_failure;  // when level < p-1
};

/// Sweeps k = 0..p-1. The mixed tables are derived pointwise from one
/// evaluation of f (b*f(a) + k*a), which agrees exactly with evaluating
/// linear_mix(b, f, k).
PermReport completeness_level(const SparsePoly& f);

/// Same sweep for the scaled member b*f.
PermReport completeness_level(const SparsePoly& f, std::uint32_t b);

/// Multiset of cycle lengths of a permutation table.
struct CycleType {
  std::map<std::uint64_t, std::uint64_t> lengths;  // length -> count
  std::uint64_t order = 1;                         // lcm of lengths
  std::uint64_t fixed_points = 0;
};

/// Requires a permutation table (parameter error otherwise).
CycleType cycle_type(const ValueTable& t);

/// lcm of cycle lengths; requires a permutation table.
std::uint64_t permutation_order(const ValueTable& t);

}  // namespace permpoly
