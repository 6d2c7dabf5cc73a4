#include "goodline/field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "goodline/error.hpp"

namespace goodline {

namespace {

using u128 = unsigned __int128;
using Poly = std::vector<std::uint64_t>;  // low-to-high over GF(p)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  // f must be monic.
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      const std::uint64_t t = mulmod(c, f[j], p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0: Fermat.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = mulmod(c, li, p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = 1, b = a, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, b, n);
      b = mulmod(b, b, n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  const std::size_t k = c.size() - 1;
  if (k == 0 || c.back() != 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  // x^(p^i) mod f for i = 1..k
  std::vector<Poly> frob(k + 1);
  frob[0] = x;
  for (std::size_t i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, c, p);
  auto minus_x = [&](Poly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob[k]).empty()) return false;
  for (std::uint64_t r : prime_factors(k)) {
    const Poly g = poly_gcd(c, minus_x(frob[k / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint64_t>(q);
  if (p_ == 2) {
    for (unsigned i = 0; i < k_; ++i)
      if (modulus_[i]) mod_bits_ |= Value{1} << i;
    for (unsigned i = 0; i < k_; ++i) {
      Value a = Value{1} << i, s = 0;
      for (unsigned j = 0; j < k_; ++j) {
        s ^= a;
        a = mul_slow(a, a);
      }
      if (s & 1) trace_mask_ |= Value{1} << i;
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

FieldPtr Field::make(std::uint64_t p, unsigned k,
                     std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) fail_input("not_prime", "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) fail_input("bad_degree", "extension degree must be at least 1");
  u128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > static_cast<u128>(UINT64_MAX))
      fail_resource("field_too_large", "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                           ") exceeds the 64-bit word budget");
  }
  std::vector<std::uint64_t> mod;
  if (k == 1) {
    // Prime fields: the element encoding does not depend on the modulus.
    mod = {0, 1};
  } else if (modulus) {
    mod = *modulus;
    if (mod.size() == k) mod.push_back(1);
    if (mod.size() != k + 1 || mod.back() != 1)
      fail_input("bad_modulus", "modulus must be monic of degree " + std::to_string(k));
    for (auto c : mod)
      if (c >= p) fail_input("bad_modulus", "modulus coefficient out of range");
    if (!is_irreducible_mod_p(mod, p)) fail_input("reducible_modulus", "modulus is reducible");
  } else {
    const std::uint64_t count = static_cast<std::uint64_t>(q);
    for (std::uint64_t v = 0; v < count; ++v) {
      mod.assign(k + 1, 0);
      std::uint64_t w = v;
      for (unsigned i = 0; i < k; ++i) {
        mod[i] = w % p;
        w /= p;
      }
      mod[k] = 1;
      if (mod[0] == 0) continue;
      if (is_irreducible_mod_p(mod, p)) break;
    }
  }
  return FieldPtr(new Field(p, k, std::move(mod)));
}

void Field::build_tables() {
  if (q_ == 2) {
    log_ = {0, 0};
    exp_ = {1, 1};
    return;
  }
  const auto factors = prime_factors(q_ - 1);
  auto pow_slow = [&](Value a, std::uint64_t e) {
    Value r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Value g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_slow(g, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) break;
  }
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  Value x = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

Field::Value Field::from_int(std::int64_t n) const noexcept {
  const auto pi = static_cast<std::int64_t>(p_);
  if (p_ > static_cast<std::uint64_t>(INT64_MAX)) return static_cast<Value>(n);
  std::int64_t r = n % pi;
  if (r < 0) r += pi;
  return static_cast<Value>(r);
}

Field::Value Field::gen() const noexcept {
  if (k_ == 1) return (p_ - modulus_[0]) % p_;
  return p_;
}

std::vector<std::uint64_t> Field::coefficients(Value a) const {
  std::vector<std::uint64_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Value Field::from_coefficients(const std::vector<std::uint64_t>& c) const {
  Value v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
  return v;
}

Field::Value Field::add_odd(Value a, Value b) const noexcept {
  if (k_ == 1) return static_cast<Value>((static_cast<u128>(a) + b) % p_);
  Value r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Field::Value Field::neg(Value a) const noexcept {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Value r = 0, pw = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

Field::Value Field::mul_slow(Value a, Value b) const noexcept {
  if (p_ == 2) {
    u128 r = 0;
    for (unsigned i = 0; i < k_; ++i)
      if ((b >> i) & 1) r ^= static_cast<u128>(a) << i;
    const u128 m = static_cast<u128>(mod_bits_) | (static_cast<u128>(1) << k_);
    for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d)
      if ((r >> d) & 1) r ^= m << (d - k_);
    return static_cast<Value>(r);
  }
  if (k_ == 1) return mulmod(a, b, p_);
  const auto ca = coefficients(a), cb = coefficients(b);
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t c = r[d];
    if (c == 0) continue;
    for (unsigned j = 0; j <= k_; ++j) r[d - k_ + j] = (r[d - k_ + j] + p_ - mulmod(c, modulus_[j], p_)) % p_;
  }
  r.resize(k_);
  return from_coefficients(r);
}

Field::Value Field::pow(Value a, std::uint64_t e) const noexcept {
  if (!exp_.empty() && a != 0) {
    const auto l = static_cast<u128>(log_[a]) * e % (q_ - 1);
    return exp_[static_cast<std::size_t>(l)];
  }
  Value r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Value Field::inv(Value a) const {
  if (a == 0) fail_input("division_by_zero", "inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

std::uint64_t Field::trace(Value a) const noexcept {
  if (p_ == 2) return static_cast<std::uint64_t>(std::popcount(a & trace_mask_) & 1);
  Value s = 0, x = a;
  for (unsigned i = 0; i < k_; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

Field::Value Field::sqrt_char2(Value a) const {
  if (p_ != 2) fail_input("wrong_characteristic", "square root requires characteristic 2");
  for (unsigned i = 1; i < k_; ++i) a = mul(a, a);
  return a;
}

std::optional<Field::Value> Field::artin_schreier(Value a) const {
  if (p_ != 2) fail_input("wrong_characteristic", "Artin-Schreier solving requires characteristic 2");
  if (trace(a) != 0) return std::nullopt;
  if (k_ == 1) return Value{0};
  // z -> z^2 + z is GF(2)-linear with kernel {0, 1}; solve over the
  // unknown bits 1..k-1 so the constant bit of z stays zero.
  const unsigned n = k_ - 1;
  std::vector<Value> cols(n);
  for (unsigned i = 0; i < n; ++i) {
    const Value e = Value{1} << (i + 1);
    cols[i] = mul(e, e) ^ e;
  }
  // rows[j] holds equation j: bits over unknowns, rhs in bit 63.
  std::vector<Value> rows(k_, 0);
  for (unsigned j = 0; j < k_; ++j) {
    for (unsigned i = 0; i < n; ++i)
      if ((cols[i] >> j) & 1) rows[j] |= Value{1} << i;
    if ((a >> j) & 1) rows[j] |= Value{1} << 63;
  }
  std::vector<int> pivot_row(n, -1);
  unsigned r = 0;
  for (unsigned c = 0; c < n && r < k_; ++c) {
    unsigned s = r;
    while (s < k_ && !((rows[s] >> c) & 1)) ++s;
    if (s == k_) continue;
    std::swap(rows[r], rows[s]);
    for (unsigned t = 0; t < k_; ++t)
      if (t != r && ((rows[t] >> c) & 1)) rows[t] ^= rows[r];
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  Value z = 0;
  for (unsigned c = 0; c < n; ++c)
    if (pivot_row[c] >= 0 && ((rows[pivot_row[c]] >> 63) & 1)) z |= Value{1} << (c + 1);
  if (mul(z, z) ^ z ^ a) fail_invariant("artin_schreier", "linear solve produced a non-solution");
  return z;
}

bool Field::is_square(Value a) const {
  if (p_ == 2) return true;
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) {
    os << "^" << k_ << "; mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  os << ")";
  return os.str();
}

std::string Field::format(Value a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coefficients(a);
  std::string out;
  for (unsigned i = 0; i < k_; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

FieldPtr parse_field_literal(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&]() -> FieldPtr {
    fail_input("bad_field_literal", "cannot parse field literal '" + std::string(text) + "'");
  };
  if (s.size() < 5 || s.rfind("GF(", 0) != 0 || s.back() != ')') return bad();
  s = s.substr(3, s.size() - 4);
  std::string head = s, tail;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    head = s.substr(0, semi);
    tail = s.substr(semi + 1);
  }
  auto parse_u64 = [&](std::string_view v) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) bad();
    return out;
  };
  std::uint64_t p = 0, k = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = parse_u64(std::string_view(head).substr(0, caret));
    k = parse_u64(std::string_view(head).substr(caret + 1));
  } else {
    p = parse_u64(head);
  }
  if (k == 0 || k > 64) bad();
  std::optional<std::vector<std::uint64_t>> modulus;
  if (!tail.empty()) {
    if (tail.rfind("mod=", 0) != 0) bad();
    std::vector<std::uint64_t> coeffs;
    std::string_view rest = std::string_view(tail).substr(4);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_u64(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    modulus = std::move(coeffs);
  }
  return Field::make(p, static_cast<unsigned>(k), std::move(modulus));
}

FieldElement::FieldElement(FieldPtr field, Value v) : field_(std::move(field)), v_(v) {
  if (!field_->contains(v_)) fail_input("bad_element", "value outside the field");
}

const Field& FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    fail_input("mixed_fields", "operands belong to different fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(v_)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return v_ == o.v_ && (field_ == o.field_ || *field_ == *o.field_);
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(v_)}; }
std::uint64_t FieldElement::trace() const { return field_->trace(v_); }
FieldElement FieldElement::sqrt() const { return {field_, field_->sqrt_char2(v_)}; }
std::optional<FieldElement> FieldElement::artin_schreier() const {
  auto z = field_->artin_schreier(v_);
  if (!z) return std::nullopt;
  return FieldElement(field_, *z);
}

Embedding::Embedding(FieldPtr sub, FieldPtr super, Value root)
    : sub_(std::move(sub)), super_(std::move(super)), root_(root) {
  powers_.resize(sub_->degree());
  Value x = super_->one();
  for (auto& pw : powers_) {
    pw = x;
    x = super_->mul(x, root_);
  }
}

Embedding Embedding::identity(FieldPtr field) {
  const Value g = field->gen();
  return Embedding(field, field, g);
}

Embedding Embedding::find(FieldPtr sub, FieldPtr super) {
  if (sub->characteristic() != super->characteristic() || super->degree() % sub->degree() != 0)
    fail_input("no_embedding", sub->describe() + " is not a subfield of " + super->describe());
  if (*sub == *super) return identity(sub);
  if (sub->degree() == 1) return Embedding(sub, super, super->zero());
  if (super->cardinality() > (std::uint64_t{1} << 32))
    fail_resource("embedding_search", "subfield root search over more than 2^32 elements");
  const auto& m = sub->modulus();
  for (Value v = 0; v < super->cardinality(); ++v) {
    Value acc = 0;
    for (std::size_t i = m.size(); i-- > 0;)
      acc = super->add(super->mul(acc, v), super->from_int(static_cast<std::int64_t>(m[i])));
    if (acc == 0) return Embedding(sub, super, v);
  }
  fail_invariant("embedding_search", "no root of the subfield modulus found");
}

Embedding::Value Embedding::operator()(Value a) const {
  if (sub_->degree() == 1) return super_->from_int(static_cast<std::int64_t>(a));
  const auto c = sub_->coefficients(a);
  Value r = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r = super_->add(r, super_->mul(super_->from_int(static_cast<std::int64_t>(c[i])), powers_[i]));
  return r;
}

}  // namespace goodline
