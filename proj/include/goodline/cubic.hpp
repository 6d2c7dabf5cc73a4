#pragma once

// Cubic threefolds in P^4, their rational lines, the normalized frame of a
// line, and the discriminant quintic of the projection away from the line.

#include <string>
#include <string_view>
#include <vector>

#include "goodline/field.hpp"
#include "goodline/kernels.hpp"
#include "goodline/linalg.hpp"
#include "goodline/poly.hpp"

namespace goodline {

class CubicThreefold {
 public:
  using Value = Field::Value;

  // Requires a nonzero homogeneous cubic in 5 variables.
  explicit CubicThreefold(Form f);
  static CubicThreefold parse(std::string_view text, FieldPtr field);
  static CubicThreefold from_coefficients(FieldPtr field, const std::vector<Value>& coeffs);

  // The 35 cubic monomials of x0..x4 in descending lexicographic order
  // (x0^3, x0^2*x1, ..., x4^3); coefficients() follows this order.
  static const std::vector<Exponents>& monomials();

  const Form& form() const noexcept { return form_; }
  const FieldPtr& field() const noexcept { return form_.field(); }
  std::vector<Value> coefficients() const;
  CubicThreefold transformed(const Matrix& m) const { return CubicThreefold(form_.substitute_linear(m)); }

 private:
  Form form_;
};

// A line as the 2x5 reduced row echelon matrix spanning its cone.
class LineInP4 {
 public:
  using Value = Field::Value;

  static LineInP4 from_points(FieldPtr field, const std::vector<Value>& a, const std::vector<Value>& b);
  static LineInP4 from_entries(FieldPtr field, const kernels::LineEntries& e);

  const FieldPtr& field() const noexcept { return field_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Value> row(std::size_t i) const { return basis_.row(i); }
  // Image under x -> M x.
  LineInP4 mapped(const Matrix& m) const;
  // "a0,...,a4;b0,...,b4"
  std::string str() const;

  bool operator==(const LineInP4& o) const { return basis_ == o.basis_; }
  auto operator<=>(const LineInP4& o) const { return basis_ <=> o.basis_; }

 private:
  LineInP4(FieldPtr field, Matrix basis) : field_(std::move(field)), basis_(std::move(basis)) {}

  FieldPtr field_;
  Matrix basis_;
};

// "a0,...,a4;b0,...,b4", entries in polynomial-basis notation.
LineInP4 parse_line(std::string_view text, FieldPtr field);

// Coordinates (x0, x1, x2, u, v) with l = V+(x0, x1, x2) and
//   f(M x) = u^2 x0 + u v x1 + v^2 x2 + u Q0 + v Q1 + R.
// The L, Q and R forms use the 3 variables x0, x1, x2.
struct GoodLineFrame {
  FieldPtr field;
  Matrix change;  // M, 5x5
  Form l0, l1, l2;
  Form q0, q1;
  Form r;

  // The normalized cubic rebuilt from the frame, in 5 variables.
  Form reassembled() const;
};

enum class LineClass { Good, InF0, NotGood };
enum class NotGoodReason { None, SingularDiscriminant, DoubleLineFiber };

struct LineClassification {
  LineClass tag = LineClass::Good;
  NotGoodReason reason = NotGoodReason::None;
  bool operator==(const LineClassification&) const = default;
};

const char* to_string(LineClass c);
const char* to_string(NotGoodReason r);

struct LineBudget {
  std::uint64_t max_field_size = 16;
};

bool is_smooth_cubic(const CubicThreefold& x, const GroebnerLimits& limits = {});
// Characteristic 2 only: no monomial x_i x_j x_k with distinct indices.
// Always false in odd characteristic.
bool is_hermitian(const CubicThreefold& x);
// The cubic restricted to the line is the zero binary form.
bool contains_line(const CubicThreefold& x, const LineInP4& l);

// Every F-rational line on X, sorted. F must contain the cubic's field.
std::vector<LineInP4> enumerate_lines(const CubicThreefold& x, const FieldPtr& f, const LineBudget& budget = {},
                                      kernels::Exec exec = kernels::Exec::Parallel);

// Throws InputData("not_on_cubic") or InputData("line_in_f0").
GoodLineFrame good_line_frame(const CubicThreefold& x, const LineInP4& l);
// In characteristic 2, H = y0 Q1^2 + y1^2 R + y1 Q0 Q1 + y2 Q0^2. In odd
// characteristic, 4 det of the symmetric matrix of the fiber conic.
Form discriminant_quintic(const GoodLineFrame& fr);
// Points of P^2 whose fiber conic is a double line: V+(y1, Q0, Q1) in
// characteristic 2, the 2x2 minors of the conic matrix otherwise.
Ideal double_line_ideal(const GoodLineFrame& fr);
LineClassification classify_line(const CubicThreefold& x, const LineInP4& l, const GroebnerLimits& limits = {});

}  // namespace goodline
