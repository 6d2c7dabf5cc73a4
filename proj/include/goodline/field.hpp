#pragma once

// Finite fields GF(p^k) in a polynomial basis over GF(p).
//
// An element is stored as a single machine word: the coefficient vector
// (c0, ..., c_{k-1}) of c0 + c1*t + ... read as a base-p integer. In
// characteristic 2 this is the usual packed bit vector. Fields with at most
// 2^20 elements additionally carry log/antilog tables for multiplication.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goodline {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  using Value = std::uint64_t;

  // Largest cardinality that gets multiplication tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  // Builds GF(p^k). Without a modulus, picks the smallest monic irreducible
  // of degree k, where candidates are ordered by the base-p integer formed
  // from their non-leading coefficients.
  static FieldPtr make(std::uint64_t p, unsigned k,
                       std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t cardinality() const noexcept { return q_; }
  bool is_char2() const noexcept { return p_ == 2; }
  // Monic, low-to-high, length k + 1.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  Value zero() const noexcept { return 0; }
  Value one() const noexcept { return 1; }
  Value from_int(std::int64_t n) const noexcept;
  // Class of t; only meaningful for k > 1.
  Value gen() const noexcept;
  bool contains(Value a) const noexcept { return a < q_; }

  std::vector<std::uint64_t> coefficients(Value a) const;
  Value from_coefficients(const std::vector<std::uint64_t>& c) const;

  Value add(Value a, Value b) const noexcept {
    return p_ == 2 ? (a ^ b) : add_odd(a, b);
  }
  Value neg(Value a) const noexcept;
  Value sub(Value a, Value b) const noexcept { return add(a, neg(b)); }
  Value mul(Value a, Value b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  Value sqr(Value a) const noexcept { return mul(a, a); }
  Value pow(Value a, std::uint64_t e) const noexcept;
  // Throws InputData("division_by_zero") on zero.
  Value inv(Value a) const;
  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  Value frobenius(Value a) const noexcept { return pow(a, p_); }
  // Tr_{GF(q)/GF(p)}(a), returned as an integer in [0, p).
  std::uint64_t trace(Value a) const noexcept;

  // Unique square root; characteristic 2 only.
  Value sqrt_char2(Value a) const;
  // z with z^2 + z = a, or nullopt when Tr(a) = 1. Of the two solutions
  // {z, z + 1} the one with zero constant coefficient is returned.
  std::optional<Value> artin_schreier(Value a) const;
  // Euler's criterion; odd characteristic only. Zero counts as a square.
  bool is_square(Value a) const;

  // Literal forms: "GF(p^k; mod=c0,c1,...)" and elements as "c0+c1*t+...".
  std::string describe() const;
  std::string format(Value a) const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  Value add_odd(Value a, Value b) const noexcept;
  Value mul_slow(Value a, Value b) const noexcept;
  void build_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  Value mod_bits_ = 0;      // char 2: modulus without the leading bit
  Value trace_mask_ = 0;    // char 2: Tr(a) = parity(a & mask)
  std::vector<std::uint32_t> log_;
  std::vector<Value> exp_;  // length 2(q - 1), so log sums need no reduction
};

bool is_prime(std::uint64_t n) noexcept;

// Rabin's test over GF(p); c is monic low-to-high.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& c, std::uint64_t p);

// Parses "GF(p^k)", "GF(p)" or "GF(p^k; mod=c0,c1,...)". The modulus list may
// include or omit the leading 1.
FieldPtr parse_field_literal(std::string_view text);

// Value with its owning field; mixing fields throws InputData("mixed_fields").
class FieldElement {
 public:
  using Value = Field::Value;

  FieldElement(FieldPtr field, Value v);

  const FieldPtr& field() const noexcept { return field_; }
  Value value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  std::uint64_t trace() const;
  FieldElement sqrt() const;
  std::optional<FieldElement> artin_schreier() const;

  std::string str() const { return field_->format(v_); }

 private:
  const Field& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Value v_;
};

// Field homomorphism GF(p^k) -> GF(p^{km}) sending t to the smallest root of
// the small field's modulus in the large field.
class Embedding {
 public:
  using Value = Field::Value;

  static Embedding find(FieldPtr sub, FieldPtr super);
  static Embedding identity(FieldPtr field);

  const FieldPtr& source() const noexcept { return sub_; }
  const FieldPtr& target() const noexcept { return super_; }
  Value image_of_gen() const noexcept { return root_; }
  Value operator()(Value a) const;

 private:
  Embedding(FieldPtr sub, FieldPtr super, Value root);

  FieldPtr sub_;
  FieldPtr super_;
  Value root_;
  std::vector<Value> powers_;  // root^i for i < k
};

}  // namespace goodline
