#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

bool is_prime(std::uint64_t n);

/// Smallest monic irreducible polynomial of degree m over GF(p),
/// "smallest" meaning the integer value sum a_i*p^i of the non-leading
/// coefficients. Deterministic. Coefficients constant-term first.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

/// Description of GF(p^m): characteristic, degree, and a monic irreducible
/// modulus (constant-term first, length m+1).
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;

  /// Parses "p^m" (default modulus) or "p^m:a0,a1,...,am".
  static FieldSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class TableMode {
  Auto,      // build exp/log/Zech tables when the field order is <= 2^16
  Forced,    // build tables, error if the field is too large
  Disabled,  // polynomial-basis arithmetic only (reference path)
};

/// Exact arithmetic context for GF(p^m) in polynomial basis over GF(p).
///
/// Elements are canonical integer indices: the element with coefficient
/// vector (c0,...,c_{m-1}) has index sum c_i*p^i, so indices run over
/// [0, p^m). Index 0 is zero, index 1 is one, constants have their own
/// value as index.
///
/// Immutable after construction and safe to share across threads; every
/// operation is a pure function of its arguments.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

  /// Validates the spec (prime p, order budget, monic irreducible modulus).
  /// A reducible modulus is rejected with a message naming a nontrivial
  /// factor or the failed irreducibility criterion.
  explicit Field(FieldSpec spec, TableMode mode = TableMode::Auto);

  /// GF(p^m) with the default (deterministic minimal) modulus.
  Field(std::uint32_t p, std::uint32_t m, TableMode mode = TableMode::Auto);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  Field(Field&&) = default;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.m; }
  std::uint64_t order() const { return q_; }
  bool has_tables() const { return !exp_.empty(); }

  // Arithmetic on element indices. Inputs are range-checked.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on zero
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;

  /// a^e. Negative exponents require a nonzero base; 0^0 = 1.
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  /// e-th Frobenius iterate a^(p^e).
  std::uint32_t frobenius(std::uint32_t a, std::uint32_t e) const;

  /// True iff a lies in the subfield GF(p^d); requires d | m.
  bool in_subfield(std::uint32_t a, std::uint32_t d) const;

  /// All p^d elements of GF(p^d), ascending index order; requires d | m.
  std::vector<std::uint32_t> subfield(std::uint32_t d) const;

  /// Least k >= 1 with a^k = 1; requires a != 0.
  std::uint64_t multiplicative_order(std::uint32_t a) const;

  // Index <-> coefficient-vector conversions.
  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t from_coeffs(std::span<const std::uint32_t> c) const;

  /// Canonical embedding of an integer: v mod p as a constant.
  std::uint32_t from_int(std::int64_t v) const;

 private:
  void check_index(std::uint32_t a) const;
  std::uint32_t add_basic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_basic(std::uint32_t a) const;
  std::uint32_t mul_basic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_basic(std::uint32_t a, std::uint64_t e) const;
  void build_tables();

  FieldSpec spec_;
  std::uint64_t q_ = 0;                   // p^m
  std::vector<std::uint64_t> ppow_;       // p^i, i = 0..m
  std::vector<std::uint32_t> red_;        // x^(m+j) mod irr, row-major m columns
  std::vector<std::uint64_t> group_factors_;  // prime factors of q-1

  // Discrete-log acceleration (exp/log plus Zech logarithms for addition).
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  std::vector<std::uint32_t> exp_;   // g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;   // inverse of exp_, log_[0] = kNoLog
  std::vector<std::uint32_t> zech_;  // zech_[k] = log(1 + g^k), kNoLog if zero
  std::uint32_t neg_shift_ = 0;      // log(-1)
};

/// A field element bound to its context; operators verify both operands
/// come from the same Field and throw std::invalid_argument otherwise.
class Element {
 public:
  Element(const Field& f, std::uint32_t index);

  std::uint32_t index() const { return idx_; }
  const Field& field() const { return *field_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(idx_); }

  Element operator-() const { return {*field_, field_->neg(idx_)}; }
  Element inv() const { return {*field_, field_->inv(idx_)}; }
  Element pow(std::int64_t e) const { return {*field_, field_->pow(idx_, e)}; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field* field_;
  std::uint32_t idx_;
};

}  // namespace permpoly
