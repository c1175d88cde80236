#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "permpoly/field.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

enum class Flavor { Plus, Star };

/// Parameters choosing one family member over GF(p^(s*n)):
/// base subfield GF(q) with q = p^s, extension degree n >= 2, parameter c
/// in the base subfield, optional scale b (default 1, must be nonzero).
/// c and b are element indices in the big field.
struct FamilyParams {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t n = 0;
  std::uint32_t c = 0;
  std::uint32_t b = 1;
  Flavor flavor = Flavor::Plus;

  /// Parses "plus:p=5,s=1,n=2,c=2" / "star:p=7,s=1,n=2,c=6,b=1".
  static FamilyParams parse(std::string_view descriptor);
  std::string descriptor() const;
};

/// m = q + q^2 + ... + q^(n-1); satisfies (m+1)(q-1) = q^n - 1 and p | m.
std::uint64_t family_m(std::uint64_t q, std::uint32_t n);

/// Family member over a caller-provided big field whose degree-s subfield
/// is the base; c must lie in that subfield.
SparsePoly family_polynomial(const Field& big, std::uint32_t s, std::uint32_t c,
                             Flavor flavor);

/// A validated family member together with its big-field context.
///
/// The big field GF(p^(s*n)) is represented once; the base subfield is the
/// Frobenius-fixed subfield of degree s, no tower construction involved.
class Family {
 public:
  explicit Family(FamilyParams params, TableMode mode = TableMode::Auto,
                  const std::optional<FieldSpec>& modulus_override = {});

  const Field& field() const { return field_; }
  const FamilyParams& params() const { return params_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t m() const { return m_; }

  /// The unscaled member: x + c*sum_j x^(j(q-1)) for plus,
  /// x + c*x*sum_j x^(j(q-1)) for star. Exactly x when c = 0.
  SparsePoly polynomial() const;

  /// b * (unscaled member).
  SparsePoly scaled_polynomial() const;

  /// Closed form of the unscaled member: identity on the base subfield;
  /// off the base, a - c for plus and (1-c)*a for star.
  std::uint32_t closed_eval(std::uint32_t a) const;

  /// True when the scale provably forces completeness level p-1:
  /// b lies in the base subfield but outside the prime subfield (so the
  /// base is a middle subfield of the big field), and for the star flavor
  /// additionally c != 1 and b*(1-c) != -k for every k = 1..p-1 (otherwise
  /// the mixed polynomial collapses off the base at that k).
  bool maximality_guaranteed() const;

 private:
  FamilyParams params_;
  Field field_;
  std::uint64_t q_ = 0;
  std::uint64_t m_ = 0;
};

}  // namespace permpoly
