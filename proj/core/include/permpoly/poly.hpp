#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

/// Full function table of a map on the field: images[i] = image of element i.
using ValueTable = std::vector<std::uint32_t>;

/// Sparse polynomial over a Field: exponent -> nonzero coefficient index.
/// The empty term map is the zero polynomial.
class SparsePoly {
 public:
  explicit SparsePoly(const Field& f) : field_(&f) {}

  /// The identity polynomial x.
  static SparsePoly x(const Field& f);

  const Field& field() const { return *field_; }
  const std::map<std::uint64_t, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  std::uint32_t coeff(std::uint64_t exp) const;

  /// Assigns the coefficient at exp (erases the term when coeff == 0).
  void set_term(std::uint64_t exp, std::uint32_t coeff);
  /// Adds coeff into the coefficient at exp, dropping it if the sum is zero.
  void add_term(std::uint64_t exp, std::uint32_t coeff);

  /// f(a), term-by-term square-and-multiply. Exact.
  std::uint32_t eval(std::uint32_t a) const;

  /// "exp:coeff" pairs sorted by exponent descending, comma separated;
  /// the zero polynomial prints as the empty string.
  std::string str() const;
  static SparsePoly parse(const Field& f, std::string_view text);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_;
  std::map<std::uint64_t, std::uint32_t> terms_;
};

/// b*f(x) + k*x. b and k are element indices; integer multipliers embed via
/// Field::from_int.
SparsePoly linear_mix(std::uint32_t b, const SparsePoly& f, std::uint32_t k);

/// images[i] = f(element i) for every element of the field.
ValueTable value_table(const SparsePoly& f);

ValueTable identity_table(const Field& f);

/// result[i] = f[g[i]] (g applied first). Lengths must match.
ValueTable compose_tables(const ValueTable& f, const ValueTable& g);

/// Applies x^Q = x: every exponent e >= 1 maps to ((e-1) mod (Q-1)) + 1,
/// summing coefficients that collide. Pointwise equal to the input on
/// the full field.
SparsePoly reduce_exponents(const SparsePoly& f);

}  // namespace permpoly
