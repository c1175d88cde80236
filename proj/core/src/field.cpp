#include "permpoly/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permpoly {

namespace {

// Dense polynomials over GF(p), coefficient lists constant-term first with
// no trailing zeros. Only used for modulus validation and the irreducible
// search; element arithmetic has its own fixed-size path.
using Dense = std::vector<std::uint32_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense mul_mod(const Dense& a, const Dense& b, const Dense& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] += std::uint64_t{a[i]} * b[j];
  }
  Dense r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = acc[i] % p;
  // reduce by the monic modulus
  const std::size_t dm = mod.size() - 1;
  while (r.size() > dm) {
    const std::uint32_t c = r.back();
    const std::size_t k = r.size() - 1 - dm;
    if (c != 0)
      for (std::size_t i = 0; i < mod.size(); ++i)
        r[i + k] = (r[i + k] + std::uint64_t{c} * (p - mod[i] % p)) % p;
    r.pop_back();
    trim(r);
    if (r.size() <= dm) break;
  }
  trim(r);
  return r;
}

// x^e mod f over GF(p).
Dense pow_x_mod(std::uint64_t e, const Dense& f, std::uint32_t p) {
  Dense result{1};
  Dense base = mul_mod({0, 1}, {1}, f, p);
  while (e) {
    if (e & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Dense poly_mod(Dense a, const Dense& m, std::uint32_t p) {
  // m need not be monic here (euclidean step for gcd)
  trim(a);
  if (m.empty()) return a;
  std::uint32_t lead_inv = 1;
  {  // inverse of m's leading coefficient mod p
    std::uint32_t l = m.back() % p, r = 1, b = l, e = p - 2;
    while (e) {
      if (e & 1) r = std::uint32_t(std::uint64_t{r} * b % p);
      b = std::uint32_t(std::uint64_t{b} * b % p);
      e >>= 1;
    }
    lead_inv = r;
  }
  while (a.size() >= m.size() && !a.empty()) {
    const std::uint32_t c = std::uint32_t(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t k = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[i + k] = (a[i + k] + std::uint64_t{c} * (p - m[i] % p)) % p;
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  // monic normalization
  if (!a.empty() && a.back() != 1) {
    std::uint32_t l = a.back(), r = 1, bb = l, e = p - 2;
    while (e) {
      if (e & 1) r = std::uint32_t(std::uint64_t{r} * bb % p);
      bb = std::uint32_t(std::uint64_t{bb} * bb % p);
      e >>= 1;
    }
    for (auto& c : a) c = std::uint32_t(std::uint64_t{c} * r % p);
  }
  return a;
}

Dense minus_x(Dense a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

std::string dense_str(const Dense& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "]";
}

// Rabin criterion. On failure fills `why` with a nontrivial factor or the
// failed criterion.
bool irreducible_check(const Dense& f, std::uint32_t p, std::string* why) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  std::uint64_t pm = 1;
  for (std::size_t i = 0; i < m; ++i) pm *= p;
  if (!minus_x(pow_x_mod(pm, f, p), p).empty()) {
    if (why) *why = "x^(p^m) != x (mod modulus)";
    return false;
  }
  for (std::uint64_t r : prime_factors(m)) {
    std::uint64_t pe = 1;
    for (std::size_t i = 0; i < m / r; ++i) pe *= p;
    Dense g = poly_gcd(f, minus_x(pow_x_mod(pe, f, p), p), p);
    if (g.size() != 1) {
      if (why) *why = "nontrivial factor " + dense_str(g);
      return false;
    }
  }
  return true;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (m == 0) throw std::invalid_argument("degree must be positive");
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    pm *= p;
    if (pm > Field::kMaxOrder)
      throw std::length_error("field order p^m exceeds the 2^20 budget");
  }
  for (std::uint64_t v = 0; v < pm; ++v) {
    Dense f(m + 1);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = std::uint32_t(t % p);
      t /= p;
    }
    f[m] = 1;
    if (irreducible_check(f, p, nullptr)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec spec;
  const auto caret = text.find('^');
  if (caret == std::string_view::npos)
    throw std::invalid_argument("field spec must look like 'p^m' or 'p^m:a0,...,am'");
  const auto colon = text.find(':');
  spec.p = std::uint32_t(parse_u64(text.substr(0, caret), "characteristic"));
  const auto m_end = colon == std::string_view::npos ? text.size() : colon;
  spec.m = std::uint32_t(parse_u64(text.substr(caret + 1, m_end - caret - 1), "degree"));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      spec.modulus.push_back(std::uint32_t(parse_u64(rest.substr(0, comma), "modulus coefficient")));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return spec;
}

std::string FieldSpec::str() const {
  std::string s = std::to_string(p) + "^" + std::to_string(m);
  if (!modulus.empty()) {
    s += ':';
    for (std::size_t i = 0; i < modulus.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(modulus[i]);
    }
  }
  return s;
}

Field::Field(FieldSpec spec, TableMode mode) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p))
    throw std::invalid_argument("characteristic must be prime, got " + std::to_string(spec_.p));
  if (spec_.m == 0) throw std::invalid_argument("extension degree must be positive");
  q_ = 1;
  ppow_.assign(spec_.m + 1, 1);
  for (std::uint32_t i = 1; i <= spec_.m; ++i) {
    q_ *= spec_.p;
    if (q_ > kMaxOrder)
      throw std::length_error("field order " + std::to_string(spec_.p) + "^" +
                              std::to_string(spec_.m) + " exceeds the 2^20 budget");
    ppow_[i] = q_;
  }
  if (spec_.modulus.empty()) spec_.modulus = find_irreducible(spec_.p, spec_.m);
  if (spec_.modulus.size() != spec_.m + 1)
    throw std::invalid_argument("modulus must have degree m = " + std::to_string(spec_.m));
  for (auto c : spec_.modulus)
    if (c >= spec_.p) throw std::invalid_argument("modulus coefficient out of range");
  if (spec_.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  std::string why;
  if (!irreducible_check(spec_.modulus, spec_.p, &why))
    throw std::invalid_argument("modulus " + spec_.str() + " is reducible: " + why);

  // reduction rows: x^(m+j) mod irr for j = 0..m-2
  const std::uint32_t m = spec_.m, p = spec_.p;
  if (m >= 2) {
    red_.assign(std::size_t{m - 1} * m, 0);
    std::vector<std::uint32_t> cur(m);  // x^m mod irr = -irr[0..m-1]
    for (std::uint32_t i = 0; i < m; ++i) cur[i] = (p - spec_.modulus[i]) % p;
    for (std::uint32_t j = 0; j + 1 < m; ++j) {
      std::copy(cur.begin(), cur.end(), red_.begin() + std::size_t{j} * m);
      // multiply by x
      std::uint32_t carry = cur[m - 1];
      for (std::uint32_t i = m; i-- > 1;) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (carry)
        for (std::uint32_t i = 0; i < m; ++i)
          cur[i] = std::uint32_t((cur[i] + std::uint64_t{carry} * ((p - spec_.modulus[i]) % p)) % p);
    }
  }

  group_factors_ = prime_factors(q_ - 1);

  const bool want_tables = mode == TableMode::Forced ||
                           (mode == TableMode::Auto && q_ <= kTableLimit);
  if (mode == TableMode::Forced && q_ > kTableLimit)
    throw std::length_error("table mode requires field order <= 2^16");
  if (want_tables && q_ > 2) build_tables();
}

Field::Field(std::uint32_t p, std::uint32_t m, TableMode mode)
    : Field(FieldSpec{p, m, {}}, mode) {}

void Field::check_index(std::uint32_t a) const {
  if (a >= q_)
    throw std::out_of_range("element index " + std::to_string(a) +
                            " out of range for field of order " + std::to_string(q_));
}

std::uint32_t Field::add_basic(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = spec_.p;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.m && (a || b); ++i) {
    const std::uint32_t d = (a % p + b % p) % p;
    r += d * std::uint32_t(ppow_[i]);
    a /= p;
    b /= p;
  }
  return r;
}

std::uint32_t Field::neg_basic(std::uint32_t a) const {
  const std::uint32_t p = spec_.p;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < spec_.m && a; ++i) {
    const std::uint32_t d = a % p;
    if (d) r += (p - d) * std::uint32_t(ppow_[i]);
    a /= p;
  }
  return r;
}

std::uint32_t Field::mul_basic(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = spec_.p, m = spec_.m;
  if (m == 1) return std::uint32_t(std::uint64_t{a} * b % p);
  std::uint32_t ca[24], cb[24];
  std::uint64_t acc[48] = {};
  for (std::uint32_t i = 0; i < m; ++i) {
    ca[i] = a % p;
    a /= p;
    cb[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < m; ++i)
    if (ca[i])
      for (std::uint32_t j = 0; j < m; ++j) acc[i + j] += std::uint64_t{ca[i]} * cb[j];
  // fold degrees >= m through the precomputed reduction rows
  std::uint64_t out[24] = {};
  for (std::uint32_t i = 0; i < m; ++i) out[i] = acc[i];
  for (std::uint32_t j = 0; j + 1 < m; ++j) {
    const std::uint64_t c = acc[m + j] % p;
    if (c) {
      const std::uint32_t* row = red_.data() + std::size_t{j} * m;
      for (std::uint32_t i = 0; i < m; ++i) out[i] += c * row[i];
    }
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = m; i-- > 0;) r = r * p + std::uint32_t(out[i] % p);
  return r;
}

std::uint32_t Field::pow_basic(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_basic(r, b);
    b = mul_basic(b, b);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  // smallest generator by index
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (std::uint64_t r : group_factors_)
      if (pow_basic(cand, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  exp_.resize(n);
  log_.assign(q_, kNoLog);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = x;
    log_[x] = std::uint32_t(k);
    x = mul_basic(x, g);
  }
  zech_.resize(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint32_t s = add_basic(exp_[k], 1);
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
  neg_shift_ = log_[spec_.p - 1];  // log(-1)
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  check_index(a);
  check_index(b);
  if (exp_.empty()) return add_basic(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t n = q_ - 1;
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint32_t d = std::uint32_t((lb + n - la) % n);
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  return exp_[(la + z) % n];
}

std::uint32_t Field::neg(std::uint32_t a) const {
  check_index(a);
  if (exp_.empty()) return neg_basic(a);
  if (a == 0) return 0;
  return exp_[(log_[a] + std::uint64_t{neg_shift_}) % (q_ - 1)];
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  check_index(a);
  check_index(b);
  if (exp_.empty()) return mul_basic(a, b);
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  check_index(a);
  if (a == 0) throw std::domain_error("inversion of zero");
  if (exp_.empty()) return pow_basic(a, q_ - 2);
  const std::uint64_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw std::domain_error("division by zero");
  return mul(a, inv(b));
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  check_index(a);
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1u : 0u;
  }
  const std::int64_t n = std::int64_t(q_ - 1);
  std::int64_t r = e % n;
  if (r < 0) r += n;
  if (exp_.empty()) return pow_basic(a, std::uint64_t(r));
  return exp_[std::uint64_t{log_[a]} * std::uint64_t(r) % std::uint64_t(n)];
}

std::uint32_t Field::frobenius(std::uint32_t a, std::uint32_t e) const {
  check_index(a);
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  std::uint64_t exp = 1;
  for (std::uint32_t i = 0; i < e; ++i) exp = exp * spec_.p % n;
  return pow(a, std::int64_t(exp));
}

bool Field::in_subfield(std::uint32_t a, std::uint32_t d) const {
  check_index(a);
  if (d == 0 || spec_.m % d != 0)
    throw std::invalid_argument("no subfield of degree " + std::to_string(d) +
                                " in GF(" + std::to_string(spec_.p) + "^" +
                                std::to_string(spec_.m) + ")");
  return frobenius(a, d) == a;
}

std::vector<std::uint32_t> Field::subfield(std::uint32_t d) const {
  if (d == 0 || spec_.m % d != 0)
    throw std::invalid_argument("no subfield of degree " + std::to_string(d) +
                                " in GF(" + std::to_string(spec_.p) + "^" +
                                std::to_string(spec_.m) + ")");
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t(ppow_[d]));
  for (std::uint32_t a = 0; a < q_; ++a)
    if (frobenius(a, d) == a) out.push_back(a);
  return out;
}

std::uint64_t Field::multiplicative_order(std::uint32_t a) const {
  check_index(a);
  if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t r : group_factors_)
    while (ord % r == 0 && pow(a, std::int64_t(ord / r)) == 1) ord /= r;
  return ord;
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t a) const {
  check_index(a);
  std::vector<std::uint32_t> c(spec_.m);
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

std::uint32_t Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > spec_.m) throw std::invalid_argument("too many coefficients");
  std::uint32_t r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= spec_.p) throw std::invalid_argument("coefficient out of range");
    r = r * spec_.p + c[i];
  }
  return r;
}

std::uint32_t Field::from_int(std::int64_t v) const {
  std::int64_t r = v % spec_.p;
  if (r < 0) r += spec_.p;
  return std::uint32_t(r);
}

Element::Element(const Field& f, std::uint32_t index) : field_(&f), idx_(index) {
  if (index >= f.order()) throw std::out_of_range("element index out of range");
}

namespace {
const Field& same_field(const Element& a, const Element& b) {
  if (&a.field() != &b.field())
    throw std::invalid_argument("operands belong to different field contexts");
  return a.field();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return {f, f.add(a.index(), b.index())};
}
Element operator-(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return {f, f.sub(a.index(), b.index())};
}
Element operator*(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return {f, f.mul(a.index(), b.index())};
}
Element operator/(const Element& a, const Element& b) {
  const Field& f = same_field(a, b);
  return {f, f.div(a.index(), b.index())};
}
bool operator==(const Element& a, const Element& b) {
  return &a.field() == &b.field() && a.index() == b.index();
}

}  // namespace permpoly
