#include "permpoly/poly.hpp"

#include <charconv>
#include <stdexcept>

namespace permpoly {

SparsePoly SparsePoly::x(const Field& f) {
  SparsePoly p(f);
  p.set_term(1, 1);
  return p;
}

std::uint32_t SparsePoly::coeff(std::uint64_t exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? 0u : it->second;
}

void SparsePoly::set_term(std::uint64_t exp, std::uint32_t coeff) {
  if (coeff >= field_->order()) throw std::out_of_range("coefficient index out of range");
  if (coeff == 0)
    terms_.erase(exp);
  else
    terms_[exp] = coeff;
}

void SparsePoly::add_term(std::uint64_t exp, std::uint32_t coeff) {
  set_term(exp, field_->add(this->coeff(exp), coeff));
}

std::uint32_t SparsePoly::eval(std::uint32_t a) const {
  std::uint32_t acc = 0;
  for (const auto& [exp, c] : terms_)
    acc = field_->add(acc, field_->mul(c, field_->pow(a, std::int64_t(exp))));
  return acc;
}

std::string SparsePoly::str() const {
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += ',';
    s += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s;
}

SparsePoly SparsePoly::parse(const Field& f, std::string_view text) {
  SparsePoly p(f);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view pair = text.substr(0, comma);
    const auto colon = pair.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("polynomial term must look like 'exp:coeff'");
    std::uint64_t exp = 0;
    std::uint32_t c = 0;
    auto [p1, e1] = std::from_chars(pair.data(), pair.data() + colon, exp);
    auto [p2, e2] =
        std::from_chars(pair.data() + colon + 1, pair.data() + pair.size(), c);
    if (e1 != std::errc{} || p1 != pair.data() + colon || e2 != std::errc{} ||
        p2 != pair.data() + pair.size())
      throw std::invalid_argument("bad polynomial term '" + std::string(pair) + "'");
    p.add_term(exp, c);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

SparsePoly linear_mix(std::uint32_t b, const SparsePoly& f, std::uint32_t k) {
  const Field& fld = f.field();
  SparsePoly out(fld);
  if (b != 0)
    for (const auto& [exp, c] : f.terms()) out.set_term(exp, fld.mul(b, c));
  if (k != 0) out.add_term(1, k);
  return out;
}

ValueTable value_table(const SparsePoly& f) {
  const std::uint64_t q = f.field().order();
  ValueTable t(q);
  for (std::uint64_t a = 0; a < q; ++a) t[a] = f.eval(std::uint32_t(a));
  return t;
}

ValueTable identity_table(const Field& f) {
  ValueTable t(f.order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::uint32_t(i);
  return t;
}

ValueTable compose_tables(const ValueTable& f, const ValueTable& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("composed tables must have equal length");
  ValueTable r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= f.size()) throw std::invalid_argument("table entry out of range");
    r[i] = f[g[i]];
  }
  return r;
}

SparsePoly reduce_exponents(const SparsePoly& f) {
  const std::uint64_t n = f.field().order() - 1;
  SparsePoly out(f.field());
  for (const auto& [exp, c] : f.terms())
    out.add_term(exp == 0 ? 0 : (exp - 1) % n + 1, c);
  return out;
}

}  // namespace permpoly
