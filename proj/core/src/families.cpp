#include "permpoly/families.hpp"

#include <charconv>
#include <stdexcept>

namespace permpoly {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

FamilyParams FamilyParams::parse(std::string_view descriptor) {
  FamilyParams out;
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument(
        "family descriptor must look like 'plus:p=5,s=1,n=2,c=2[,b=1]'");
  const std::string_view flavor = descriptor.substr(0, colon);
  if (flavor == "plus")
    out.flavor = Flavor::Plus;
  else if (flavor == "star")
    out.flavor = Flavor::Star;
  else
    throw std::invalid_argument("unknown family flavor '" + std::string(flavor) + "'");

  bool have_p = false, have_s = false, have_n = false, have_c = false;
  std::string_view rest = descriptor.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view pair = rest.substr(0, comma);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("family parameter must look like 'key=value', got '" +
                                  std::string(pair) + "'");
    const std::string_view key = pair.substr(0, eq);
    const std::uint64_t val = parse_u64(pair.substr(eq + 1), key);
    if (key == "p") {
      out.p = std::uint32_t(val);
      have_p = true;
    } else if (key == "s") {
      out.s = std::uint32_t(val);
      have_s = true;
    } else if (key == "n") {
      out.n = std::uint32_t(val);
      have_n = true;
    } else if (key == "c") {
      out.c = std::uint32_t(val);
      have_c = true;
    } else if (key == "b") {
      out.b = std::uint32_t(val);
    } else {
      throw std::invalid_argument("unknown family parameter '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (!have_p || !have_s || !have_n || !have_c)
    throw std::invalid_argument("family descriptor requires p, s, n and c");
  return out;
}

std::string FamilyParams::descriptor() const {
  std::string s_out = flavor == Flavor::Plus ? "plus:" : "star:";
  s_out += "p=" + std::to_string(p) + ",s=" + std::to_string(s) +
           ",n=" + std::to_string(n) + ",c=" + std::to_string(c);
  if (b != 1) s_out += ",b=" + std::to_string(b);
  return s_out;
}

std::uint64_t family_m(std::uint64_t q, std::uint32_t n) {
  if (q < 3) throw std::invalid_argument("base field order must be at least 3");
  if (n < 2) throw std::invalid_argument("extension degree n must be at least 2");
  std::uint64_t m = 0, qi = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    qi *= q;
    m += qi;
  }
  return m;
}

SparsePoly family_polynomial(const Field& big, std::uint32_t s, std::uint32_t c,
                             Flavor flavor) {
  if (s == 0 || big.degree() % s != 0 || big.degree() == s)
    throw std::invalid_argument("base degree must properly divide the field degree");
  if (!big.in_subfield(c, s))
    throw std::invalid_argument("parameter c (index " + std::to_string(c) +
                                ") must lie in the base subfield");
  SparsePoly f = SparsePoly::x(big);
  if (c == 0) return f;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) q *= big.p();
  const std::uint64_t m = family_m(q, big.degree() / s);
  const std::uint64_t shift = flavor == Flavor::Star ? 1 : 0;
  for (std::uint64_t j = 1; j <= m; ++j) f.set_term(j * (q - 1) + shift, c);
  return f;
}

Family::Family(FamilyParams params, TableMode mode,
               const std::optional<FieldSpec>& modulus_override)
    : params_(params),
      field_([&] {
        if (params.p == 2)
          throw std::invalid_argument("families require odd characteristic");
        if (!is_prime(params.p))
          throw std::invalid_argument("characteristic must be prime, got " +
                                      std::to_string(params.p));
        if (params.s == 0) throw std::invalid_argument("base degree s must be positive");
        if (params.n < 2)
          throw std::invalid_argument("extension degree n must be at least 2");
        const std::uint32_t deg = params.s * params.n;
        if (modulus_override) {
          if (modulus_override->p != params.p || modulus_override->m != deg)
            throw std::invalid_argument("modulus override is for GF(" +
                                        std::to_string(modulus_override->p) + "^" +
                                        std::to_string(modulus_override->m) +
                                        "), family needs GF(" + std::to_string(params.p) +
                                        "^" + std::to_string(deg) + ")");
          return Field(*modulus_override, mode);
        }
        return Field(params.p, deg, mode);
      }()) {
  q_ = 1;
  for (std::uint32_t i = 0; i < params_.s; ++i) q_ *= params_.p;
  m_ = family_m(q_, params_.n);
  if (params_.c >= field_.order() || !field_.in_subfield(params_.c, params_.s))
    throw std::invalid_argument("parameter c (index " + std::to_string(params_.c) +
                                ") must lie in the base subfield GF(" +
                                std::to_string(q_) + ")");
  if (params_.b == 0) throw std::invalid_argument("scale b must be nonzero");
  if (params_.b >= field_.order())
    throw std::out_of_range("scale b out of range for field of order " +
                            std::to_string(field_.order()));
}

SparsePoly Family::polynomial() const {
  return family_polynomial(field_, params_.s, params_.c, params_.flavor);
}

SparsePoly Family::scaled_polynomial() const { return linear_mix(params_.b, polynomial(), 0); }

std::uint32_t Family::closed_eval(std::uint32_t a) const {
  if (field_.in_subfield(a, params_.s)) return a;
  if (params_.flavor == Flavor::Plus) return field_.sub(a, params_.c);
  return field_.mul(field_.sub(1, params_.c), a);
}

bool Family::maximality_guaranteed() const {
  if (!field_.in_subfield(params_.b, params_.s) || field_.in_subfield(params_.b, 1))
    return false;
  if (params_.flavor == Flavor::Star) {
    if (params_.c == 1) return false;
    const std::uint32_t mult = field_.mul(params_.b, field_.sub(1, params_.c));
    for (std::uint32_t k = 1; k < params_.p; ++k)
      if (field_.add(mult, field_.from_int(k)) == 0) return false;
  }
  return true;
}

}  // namespace permpoly
