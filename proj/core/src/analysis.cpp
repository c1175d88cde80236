#include "permpoly/analysis.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace permpoly {

namespace {
constexpr std::uint32_t kUnseen = 0xffffffffu;
}

PermCheck check_permutation(const ValueTable& t) {
  std::vector<std::uint32_t> first(t.size(), kUnseen);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    const std::uint32_t img = t[i];
    if (img >= t.size()) throw std::invalid_argument("table entry out of range");
    if (first[img] != kUnseen) return {false, Collision{first[img], i, img}};
    first[img] = i;
  }
  return {true, std::nullopt};
}

PermReport completeness_level(const SparsePoly& f) { return completeness_level(f, 1); }

PermReport completeness_level(const SparsePoly& f, std::uint32_t b) {
  const Field& fld = f.field();
  const std::uint32_t p = fld.p();
  const std::uint64_t q = fld.order();

  ValueTable base = value_table(f);
  if (b != 1)
    for (auto& v : base) v = fld.mul(b, v);

  PermReport report;
  ValueTable mixed(q);
  for (std::uint32_t k = 0; k < p; ++k) {
    const std::uint32_t ke = fld.from_int(k);
    for (std::uint64_t a = 0; a < q; ++a)
      mixed[a] = fld.add(base[a], fld.mul(ke, std::uint32_t(a)));
    const PermCheck check = check_permutation(mixed);
    if (k == 0) {
      report.is_permutation = check.is_permutation;
      if (!check.is_permutation) {
        report.collision_witness = check.witness;
        report.level = -1;
        return report;
      }
    }
    if (!check.is_permutation) {
      report.level = int(k) - 1;
      report.level_failure = LevelFailure{k, *check.witness};
      return report;
    }
  }
  report.level = int(p) - 1;
  return report;
}

CycleType cycle_type(const ValueTable& t) {
  const PermCheck check = check_permutation(t);
  if (!check.is_permutation)
    throw std::invalid_argument("cycle type requires a permutation table");
  CycleType ct;
  std::vector<bool> seen(t.size(), false);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = t[j];
      ++len;
    }
    ++ct.lengths[len];
  }
  ct.fixed_points = ct.lengths.count(1) ? ct.lengths.at(1) : 0;
  ct.order = 1;
  for (const auto& [len, count] : ct.lengths) {
    const std::uint64_t g = std::gcd(ct.order, len);
    const std::uint64_t factor = len / g;
    if (ct.order > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("permutation order exceeds 64 bits");
    ct.order *= factor;
  }
  return ct;
}

std::uint64_t permutation_order(const ValueTable& t) { return cycle_type(t).order; }

}  // namespace permpoly
