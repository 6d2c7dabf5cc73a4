#pragma once

// Sparse multivariate polynomials over a Field, Groebner bases, and a
// projective emptiness test over the algebraic closure.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goodline/field.hpp"
#include "goodline/linalg.hpp"

namespace goodline {

inline constexpr std::size_t kMaxVars = 8;
using Exponents = std::array<std::uint16_t, kMaxVars>;

enum class MonomialOrder { Grevlex, Lex };

unsigned total_degree(const Exponents& e) noexcept;
// True when a comes strictly before b (a is the larger monomial).
bool monomial_greater(MonomialOrder order, const Exponents& a, const Exponents& b, std::size_t nvars) noexcept;

struct Term {
  Exponents exp{};
  Field::Value coeff = 0;
  bool operator==(const Term&) const = default;
};

// Terms are kept sorted in descending grevlex order with no zero coefficients,
// so equal polynomials have identical term lists.
class Form {
 public:
  using Value = Field::Value;

  Form(FieldPtr field, std::size_t nvars);
  Form(FieldPtr field, std::size_t nvars, std::vector<Term> terms);

  static Form constant(FieldPtr field, std::size_t nvars, Value c);
  static Form variable(FieldPtr field, std::size_t nvars, std::size_t i);
  static Form monomial(FieldPtr field, std::size_t nvars, const Exponents& e, Value c);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero form.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Value coefficient(const Exponents& e) const;
  // Largest exponent of variable i.
  unsigned degree_in(std::size_t i) const noexcept;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form operator-() const;
  Form scaled(Value c) const;
  Form pow(unsigned e) const;
  bool operator==(const Form& o) const;

  Form partial(std::size_t i) const;
  // Degree-d homogeneous component.
  Form component(unsigned d) const;

  Value evaluate(std::span<const Value> point) const;
  // Point coordinates live in emb.target(); coefficients are mapped through emb.
  Value evaluate(const Embedding& emb, std::span<const Value> point) const;

  // Substitutes x_i -> images[i]; all images share a field and variable count.
  Form compose(const std::vector<Form>& images) const;
  // f(Mx), i.e. x_i -> sum_j M(i, j) x_j. Throws on singular M.
  Form substitute_linear(const Matrix& m) const;
  // Sets x_i = 1 and drops the variable.
  Form dehomogenize(std::size_t i) const;
  // Maps coefficients into a larger field.
  Form embedded(const Embedding& emb) const;

  std::string str(const std::vector<std::string>& vars) const;
  std::string str() const;

 private:
  void check_compatible(const Form& o) const;

  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

std::vector<std::string> default_variables(std::size_t n, std::string_view prefix = "x");

// Grammar: sums and differences of products of powers; parentheses group;
// integers are prime-field literals and `t` names the field generator when
// it is not a variable. Errors: syntax_error (with position), unknown_variable,
// coefficient_not_in_field.
Form parse_form(std::string_view text, FieldPtr field, const std::vector<std::string>& vars);
// Also requires a nonzero homogeneous result (not_homogeneous otherwise).
Form parse_homogeneous_form(std::string_view text, FieldPtr field, const std::vector<std::string>& vars);
// A single field element in polynomial-basis notation, e.g. "1+t^2".
Field::Value parse_element(std::string_view text, const FieldPtr& field);

struct Ideal {
  FieldPtr field;
  std::size_t nvars = 0;
  std::vector<Form> gens;
  MonomialOrder order = MonomialOrder::Grevlex;

  Ideal(FieldPtr f, std::size_t n, std::vector<Form> g, MonomialOrder o = MonomialOrder::Grevlex);
};

struct GroebnerLimits {
  unsigned max_degree = 40;
  std::size_t max_pairs = 200000;
};

// Reduced, monic, sorted by leading monomial (descending). Throws
// Resource("groebner_degree_cap" / "groebner_pair_cap") instead of truncating.
Ideal groebner_basis(const Ideal& ideal, const GroebnerLimits& limits = {});
// Remainder of f on division by a Groebner basis.
Form normal_form(const Form& f, const Ideal& basis);
bool contains_one(const Ideal& basis);

// f together with its nonzero first partials.
Ideal jacobian_ideal(const Form& f);
// V+(I) empty over the algebraic closure, via the unit ideal on every chart.
bool projective_is_empty(const Ideal& ideal, const GroebnerLimits& limits = {});

}  // namespace goodline
