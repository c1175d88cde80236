#include "permpoly/groups.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "permpoly/families.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

namespace {

struct BaseSetup {
  std::vector<std::uint32_t> base;                       // elements of GF(q)
  std::unordered_map<std::uint32_t, std::size_t> index;  // element -> position
  std::uint64_t q = 0;
  std::uint32_t n = 0;
};

BaseSetup base_setup(const Field& big, std::uint32_t s) {
  if (s == 0 || big.degree() % s != 0 || big.degree() == s)
    throw std::invalid_argument("base degree must properly divide the field degree");
  BaseSetup out;
  out.base = big.subfield(s);
  out.q = out.base.size();
  out.n = big.degree() / s;
  for (std::size_t i = 0; i < out.base.size(); ++i) out.index[out.base[i]] = i;
  return out;
}

// Tables of f_{c±} for every c in the base, positionally aligned with
// setup.base. Built from the sparse polynomials, not the closed form.
std::vector<ValueTable> family_tables(const Field& big, const BaseSetup& setup,
                                      std::uint32_t s, Flavor flavor) {
  std::vector<ValueTable> tables;
  tables.reserve(setup.base.size());
  for (const std::uint32_t c : setup.base)
    tables.push_back(value_table(family_polynomial(big, s, c, flavor)));
  return tables;
}

std::optional<std::uint64_t> first_mismatch(const ValueTable& a, const ValueTable& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

bool tables_injective(const std::vector<ValueTable>& tables) {
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (tables[i] == tables[j]) return false;
  return true;
}

}  // namespace

GroupCheckReport verify_additive_group(const Field& big, std::uint32_t s) {
  const BaseSetup setup = base_setup(big, s);
  GroupCheckReport report;
  report.law = "additive";
  report.base_q = setup.q;
  report.law_holds = true;

  const std::vector<ValueTable> tables = family_tables(big, setup, s, Flavor::Plus);
  const ValueTable id = identity_table(big);

  for (std::size_t ci = 0; ci < setup.base.size() && report.law_holds; ++ci)
    for (std::size_t di = 0; di < setup.base.size(); ++di) {
      const std::uint32_t c = setup.base[ci], d = setup.base[di];
      const ValueTable composed = compose_tables(tables[ci], tables[di]);
      const ValueTable& expect = tables[setup.index.at(big.add(c, d))];
      if (const auto at = first_mismatch(composed, expect)) {
        report.law_holds = false;
        report.counterexample = GroupCounterexample{c, d, *at};
        break;
      }
      ++report.checked_pairs;
    }

  report.iso_verified = report.law_holds && tables[setup.index.at(0)] == id &&
                        tables_injective(tables);
  return report;
}

GroupCheckReport verify_multiplicative_group(const Field& big, std::uint32_t s) {
  const BaseSetup setup = base_setup(big, s);
  GroupCheckReport report;
  report.law = "multiplicative";
  report.base_q = setup.q;
  report.law_holds = true;

  const std::vector<ValueTable> tables = family_tables(big, setup, s, Flavor::Star);
  const ValueTable id = identity_table(big);

  std::vector<std::uint32_t> domain;  // base minus {1}
  for (const std::uint32_t c : setup.base)
    if (c != 1) domain.push_back(c);

  for (const std::uint32_t c : domain) {
    if (!report.law_holds) break;
    for (const std::uint32_t d : domain) {
      // composition parameter c+d-cd; closure demands it stays != 1
      const std::uint32_t e = big.sub(big.add(c, d), big.mul(c, d));
      if (e == 1) {
        report.law_holds = false;
        report.counterexample = GroupCounterexample{c, d, 0};
        break;
      }
      const ValueTable composed =
          compose_tables(tables[setup.index.at(c)], tables[setup.index.at(d)]);
      if (const auto at = first_mismatch(composed, tables[setup.index.at(e)])) {
        report.law_holds = false;
        report.counterexample = GroupCounterexample{c, d, *at};
        break;
      }
      ++report.checked_pairs;
    }
  }

  bool inverses_ok = true, iso_ok = true;
  std::vector<bool> hit(setup.base.size(), false);
  for (const std::uint32_t c : domain) {
    if (!report.law_holds) break;
    // inverse parameter c' = c/(c-1); f_{c'*} o f_{c*} must be the identity
    const std::uint32_t cp = c == 0 ? 0 : big.div(c, big.sub(c, 1));
    const ValueTable composed =
        compose_tables(tables[setup.index.at(cp)], tables[setup.index.at(c)]);
    if (const auto at = first_mismatch(composed, id)) {
      inverses_ok = false;
      report.counterexample = GroupCounterexample{c, std::nullopt, *at};
      break;
    }
    // iso c -> 1-c onto GF(q)^*: injectivity via the hit mask, and the
    // homomorphism (1-c)(1-d) = 1-(c+d-cd) is the law already checked
    const std::uint32_t phi = big.sub(1, c);
    if (phi == 0 || hit[setup.index.at(phi)]) iso_ok = false;
    hit[setup.index.at(phi)] = true;
  }

  report.law_holds = report.law_holds && inverses_ok &&
                     tables[setup.index.at(0)] == id;
  report.iso_verified =
      report.law_holds && iso_ok && tables_injective(tables);
  return report;
}

GroupCheckReport verify_star_lemma(const Field& gfq) {
  GroupCheckReport report;
  report.law = "star-lemma";
  report.base_q = gfq.order();
  report.law_holds = true;

  const std::uint64_t q = gfq.order();
  const auto star = [&](std::uint32_t a, std::uint32_t b) {
    return gfq.sub(gfq.add(a, b), gfq.mul(a, b));
  };

  std::vector<std::uint32_t> S;
  for (std::uint32_t a = 0; a < q; ++a)
    if (a != 1) S.push_back(a);

  std::vector<bool> hit(q, false);
  for (const std::uint32_t a : S) {
    if (!report.law_holds) break;
    // identity and inverses
    if (star(a, 0) != a || star(0, a) != a) {
      report.law_holds = false;
      report.counterexample = GroupCounterexample{a, 0, 0};
      break;
    }
    const std::uint32_t ainv = a == 0 ? 0 : gfq.div(a, gfq.sub(a, 1));
    if (ainv == 1 || star(a, ainv) != 0) {
      report.law_holds = false;
      report.counterexample = GroupCounterexample{a, ainv, 0};
      break;
    }
    // phi(a) = 1-a lands in K^* and is injective
    const std::uint32_t phi = gfq.sub(1, a);
    if (phi == 0 || hit[phi]) {
      report.law_holds = false;
      report.counterexample = GroupCounterexample{a, std::nullopt, 0};
      break;
    }
    hit[phi] = true;
    for (const std::uint32_t b : S) {
      // closure and the homomorphism phi(a*b) = phi(a)phi(b)
      const std::uint32_t ab = star(a, b);
      if (ab == 1 ||
          gfq.sub(1, ab) != gfq.mul(gfq.sub(1, a), gfq.sub(1, b))) {
        report.law_holds = false;
        report.counterexample = GroupCounterexample{a, b, 0};
        break;
      }
      ++report.checked_pairs;
    }
  }

  // associativity over all triples
  for (std::size_t i = 0; i < S.size() && report.law_holds; ++i)
    for (std::size_t j = 0; j < S.size() && report.law_holds; ++j)
      for (std::size_t k = 0; k < S.size(); ++k)
        if (star(star(S[i], S[j]), S[k]) != star(S[i], star(S[j], S[k]))) {
          report.law_holds = false;
          report.counterexample = GroupCounterexample{S[i], S[j], S[k]};
          break;
        }

  report.iso_verified = report.law_holds;
  return report;
}

GroupCheckReport verify_relationship(const Field& big, std::uint32_t s) {
  const BaseSetup setup = base_setup(big, s);
  GroupCheckReport report;
  report.law = "relationship";
  report.base_q = setup.q;
  report.law_holds = true;

  for (const std::uint32_t c : setup.base) {
    SparsePoly plus = family_polynomial(big, s, c, Flavor::Plus);
    const SparsePoly star = family_polynomial(big, s, c, Flavor::Star);
    // x * (f_{c+} - x + 1)
    plus.add_term(1, big.neg(1));
    plus.add_term(0, 1);
    SparsePoly lhs(big);
    for (const auto& [exp, coeff] : plus.terms()) lhs.set_term(exp + 1, coeff);
    if (!(lhs == star)) {
      std::uint64_t at = 0;
      for (const auto& [exp, coeff] : star.terms())
        if (lhs.coeff(exp) != coeff) {
          at = exp;
          break;
        }
      report.law_holds = false;
      report.counterexample = GroupCounterexample{c, std::nullopt, at};
      break;
    }
    ++report.checked_pairs;
  }
  report.iso_verified = report.law_holds;
  return report;
}

}  // namespace permpoly
