#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "permpoly/field.hpp"

namespace permpoly {

/// Parameters (c, d as element indices) and the element where a law failed.
struct GroupCounterexample {
  std::uint32_t c = 0;
  std::optional<std::uint32_t> d;
  std::uint64_t at = 0;  // element index, or exponent for the relationship law
};

struct GroupCheckReport {
  std::string law;  // "additive" | "multiplicative" | "star-lemma" | "relationship"
  std::uint64_t base_q = 0;
  bool law_holds = false;
  bool iso_verified = false;
  std::uint64_t checked_pairs = 0;
  std::optional<GroupCounterexample> counterexample;

  bool holds() const { return law_holds && iso_verified; }
};

/// Theorem: { table(f_{c+}) : c in GF(q) } is a group under composition,
/// isomorphic to (GF(q), +). Checks the composition law on all q^2 pairs,
/// that c = 0 maps to the identity table, and that distinct c give
/// distinct tables. The base subfield is GF(p^s) inside the big field.
GroupCheckReport verify_additive_group(const Field& big, std::uint32_t s);

/// { table(f_{c*}) : c in GF(q), c != 1 } under composition is isomorphic
/// to GF(q)^*. Checks f_{c*} o f_{d*} = f_{(c+d-cd)*} with c+d-cd != 1 on
/// all pairs, the inverse parameter c/(c-1), the neutral element c = 0,
/// and the isomorphism c -> 1-c onto GF(q)^*.
GroupCheckReport verify_multiplicative_group(const Field& big, std::uint32_t s);

/// For the field K = gfq: (K \ {1}, a*b = a+b-ab) is a group isomorphic
/// to K^* under a -> 1-a. Exhaustive over pairs and associativity triples.
GroupCheckReport verify_star_lemma(const Field& gfq);

/// Coefficient identity x*(f_{c+}(x) - x + 1) = f_{c*}(x), exact sparse
/// equality for every c in the base subfield.
GroupCheckReport verify_relationship(const Field& big, std::uint32_t s);

}  // namespace permpoly
