#include "goodline/cubic.hpp"

#include <algorithm>
#include <optional>

#include "goodline/error.hpp"

namespace goodline {

namespace {

const std::vector<std::string>& xvars() {
  static const auto v = default_variables(5);
  return v;
}

Form var3(const FieldPtr& f, std::size_t i) { return Form::variable(f, 3, i); }

// Coefficient of u^eu v^ev in a form on (x0, x1, x2, u, v), as a form in x0, x1, x2.
Form uv_coefficient(const Form& g, unsigned eu, unsigned ev) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    if (t.exp[3] != eu || t.exp[4] != ev) continue;
    Term d{};
    d.coeff = t.coeff;
    for (std::size_t i = 0; i < 3; ++i) d.exp[i] = t.exp[i];
    out.push_back(d);
  }
  return Form(g.field(), 3, std::move(out));
}

Form lift5(const Form& f3) {
  std::vector<Term> out = f3.terms();
  return Form(f3.field(), 5, std::move(out));
}

}  // namespace

CubicThreefold::CubicThreefold(Form f) : form_(std::move(f)) {
  if (form_.nvars() != 5) fail_input("bad_cubic", "a cubic threefold needs 5 variables");
  if (form_.is_zero()) fail_input("zero_form", "cubic form is identically zero");
  if (!form_.is_homogeneous() || form_.degree() != 3)
    fail_input("not_homogeneous", "cubic form must be homogeneous of degree 3");
}

CubicThreefold CubicThreefold::parse(std::string_view text, FieldPtr field) {
  return CubicThreefold(parse_homogeneous_form(text, std::move(field), xvars()));
}

const std::vector<Exponents>& CubicThreefold::monomials() {
  static const std::vector<Exponents> list = [] {
    std::vector<Exponents> out;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b)
        for (int c = 3 - a - b; c >= 0; --c)
          for (int d = 3 - a - b - c; d >= 0; --d) {
            Exponents e{};
            e[0] = static_cast<std::uint16_t>(a);
            e[1] = static_cast<std::uint16_t>(b);
            e[2] = static_cast<std::uint16_t>(c);
            e[3] = static_cast<std::uint16_t>(d);
            e[4] = static_cast<std::uint16_t>(3 - a - b - c - d);
            out.push_back(e);
          }
    return out;
  }();
  return list;
}

CubicThreefold CubicThreefold::from_coefficients(FieldPtr field, const std::vector<Value>& coeffs) {
  const auto& mons = monomials();
  if (coeffs.size() != mons.size()) fail_input("bad_cubic", "expected 35 coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (coeffs[i]) terms.push_back({mons[i], coeffs[i]});
  return CubicThreefold(Form(std::move(field), 5, std::move(terms)));
}

std::vector<CubicThreefold::Value> CubicThreefold::coefficients() const {
  std::vector<Value> out;
  for (const auto& e : monomials()) out.push_back(form_.coefficient(e));
  return out;
}

LineInP4 LineInP4::from_points(FieldPtr field, const std::vector<Value>& a, const std::vector<Value>& b) {
  if (a.size() != 5 || b.size() != 5) fail_input("bad_line", "a line needs two points with 5 coordinates");
  Matrix m(2, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    if (!field->contains(a[j]) || !field->contains(b[j])) fail_input("bad_element", "coordinate outside the field");
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  Matrix r = rref(*field, m);
  if (r.rows() != 2) fail_input("degenerate_line", "the two points do not span a line");
  return LineInP4(std::move(field), std::move(r));
}

LineInP4 LineInP4::from_entries(FieldPtr field, const kernels::LineEntries& e) {
  return from_points(std::move(field), {e.begin(), e.begin() + 5}, {e.begin() + 5, e.end()});
}

LineInP4 LineInP4::mapped(const Matrix& m) const {
  return from_points(field_, apply(*field_, m, row(0)), apply(*field_, m, row(1)));
}

std::string LineInP4::str() const {
  std::string out;
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) out += ";";
    for (std::size_t c = 0; c < 5; ++c) out += (c ? "," : "") + field_->format(basis_(r, c));
  }
  return out;
}

LineInP4 parse_line(std::string_view text, FieldPtr field) {
  std::vector<std::vector<Field::Value>> pts(1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      pts.back().push_back(parse_element(text.substr(start, i - start), field));
      if (i < text.size() && text[i] == ';') pts.emplace_back();
      start = i + 1;
    }
  }
  if (pts.size() != 2) fail_input("bad_line", "line must be two ';'-separated points");
  return LineInP4::from_points(std::move(field), pts[0], pts[1]);
}

Form GoodLineFrame::reassembled() const {
  const auto u = Form::variable(field, 5, 3), v = Form::variable(field, 5, 4);
  return u * u * lift5(l0) + u * v * lift5(l1) + v * v * lift5(l2) + u * lift5(q0) + v * lift5(q1) + lift5(r);
}

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Good: return "Good";
    case LineClass::InF0: return "InF0";
    case LineClass::NotGood: return "NotGood";
  }
  return "?";
}

const char* to_string(NotGoodReason r) {
  switch (r) {
    case NotGoodReason::None: return "None";
    case NotGoodReason::SingularDiscriminant: return "SingularDiscriminant";
    case NotGoodReason::DoubleLineFiber: return "DoubleLineFiber";
  }
  return "?";
}

bool is_smooth_cubic(const CubicThreefold& x, const GroebnerLimits& limits) {
  return projective_is_empty(jacobian_ideal(x.form()), limits);
}

bool is_hermitian(const CubicThreefold& x) {
  if (!x.field()->is_char2()) return false;
  for (const auto& t : x.form().terms())
    if (std::all_of(t.exp.begin(), t.exp.begin() + 5, [](std::uint16_t e) { return e <= 1; })) return false;
  return true;
}

namespace {

Form cubic_over(const CubicThreefold& x, const FieldPtr& f) {
  if (*x.field() == *f) return x.form();
  return x.form().embedded(Embedding::find(x.field(), f));
}

}  // namespace

bool contains_line(const CubicThreefold& x, const LineInP4& l) {
  const Form f = cubic_over(x, l.field());
  // f(s a + t b) as a binary form.
  const auto a = l.row(0), b = l.row(1);
  std::vector<Form> images;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Term> lin{{Exponents{1, 0}, a[i]}, {Exponents{0, 1}, b[i]}};
    images.emplace_back(l.field(), 2, std::move(lin));
  }
  return f.compose(images).is_zero();
}

std::vector<LineInP4> enumerate_lines(const CubicThreefold& x, const FieldPtr& f, const LineBudget& budget,
                                      kernels::Exec exec) {
  if (f->cardinality() > budget.max_field_size)
    fail_resource("line_budget", "line enumeration over " + f->describe() + " exceeds the field-size budget of " +
                                     std::to_string(budget.max_field_size));
  const Embedding emb = *x.field() == *f ? Embedding::identity(f) : Embedding::find(x.field(), f);
  const auto compiled = kernels::CompiledForm::compile(x.form(), emb);
  std::vector<LineInP4> out;
  for (const auto& e : kernels::scan_lines(exec, *f, compiled)) out.push_back(LineInP4::from_entries(f, e));
  std::sort(out.begin(), out.end());
  return out;
}

GoodLineFrame good_line_frame(const CubicThreefold& x, const LineInP4& l) {
  const FieldPtr& F = l.field();
  if (!contains_line(x, l)) fail_input("not_on_cubic", "line " + l.str() + " does not lie on the cubic");
  const Form f = cubic_over(x, F);

  // Extend the line's rows greedily by standard vectors in index order.
  Matrix span(2, 5);
  for (std::size_t c = 0; c < 5; ++c) {
    span(0, c) = l.basis()(0, c);
    span(1, c) = l.basis()(1, c);
  }
  std::vector<std::size_t> extra;
  for (std::size_t j = 0; j < 5 && extra.size() < 3; ++j) {
    Matrix trial(span.rows() + 1, 5);
    for (std::size_t r = 0; r < span.rows(); ++r)
      for (std::size_t c = 0; c < 5; ++c) trial(r, c) = span(r, c);
    trial(span.rows(), j) = 1;
    if (rank(*F, trial) == trial.rows()) {
      span = trial;
      extra.push_back(j);
    }
  }
  Matrix m(5, 5);
  for (std::size_t k = 0; k < 3; ++k) m(extra[k], k) = 1;
  for (std::size_t c = 0; c < 5; ++c) {
    m(c, 3) = l.basis()(0, c);
    m(c, 4) = l.basis()(1, c);
  }

  Form g = f.substitute_linear(m);
  // L_i are the coefficients of u^2, uv, v^2.
  const Form l0 = uv_coefficient(g, 2, 0), l1 = uv_coefficient(g, 1, 1), l2 = uv_coefficient(g, 0, 2);
  Matrix lmat(3, 3);
  const std::array<const Form*, 3> ls{&l0, &l1, &l2};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Exponents e{};
      e[j] = 1;
      lmat(i, j) = ls[i]->coefficient(e);
    }
  const auto linv = inverse(*F, lmat);
  if (!linv) fail_input("line_in_f0", "L0, L1, L2 are linearly dependent; the line lies in F0");

  // x' = L^{-1} z turns L_i into z_i.
  Matrix block = Matrix::identity(5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = (*linv)(i, j);
  const Matrix total = multiply(*F, m, block);
  g = f.substitute_linear(total);

  GoodLineFrame fr{F,
                   total,
                   uv_coefficient(g, 2, 0),
                   uv_coefficient(g, 1, 1),
                   uv_coefficient(g, 0, 2),
                   uv_coefficient(g, 1, 0),
                   uv_coefficient(g, 0, 1),
                   uv_coefficient(g, 0, 0)};
  if (!(fr.l0 == var3(F, 0) && fr.l1 == var3(F, 1) && fr.l2 == var3(F, 2)) || !(fr.reassembled() == g))
    fail_invariant("frame_normalization", "normalized frame does not reproduce the cubic");
  return fr;
}

Form discriminant_quintic(const GoodLineFrame& fr) {
  const FieldPtr& F = fr.field;
  const Form y0 = var3(F, 0), y1 = var3(F, 1), y2 = var3(F, 2);
  const Form& q0 = fr.q0;
  const Form& q1 = fr.q1;
  const Form& r = fr.r;
  if (F->is_char2()) return y0 * q1 * q1 + y1 * y1 * r + y1 * q0 * q1 + y2 * q0 * q0;
  return (y0 * y2 * r).scaled(F->from_int(4)) + y1 * q0 * q1 - y0 * q1 * q1 - y2 * q0 * q0 - y1 * y1 * r;
}

Ideal double_line_ideal(const GoodLineFrame& fr) {
  const FieldPtr& F = fr.field;
  if (F->is_char2()) return Ideal(F, 3, {var3(F, 1), fr.q0, fr.q1});
  // 2A for the conic matrix A in (u, v, t).
  const Form two = Form::constant(F, 3, F->from_int(2));
  const std::array<std::array<Form, 3>, 3> b{{{two * var3(F, 0), var3(F, 1), fr.q0},
                                              {var3(F, 1), two * var3(F, 2), fr.q1},
                                              {fr.q0, fr.q1, two * fr.r}}};
  std::vector<Form> minors;
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1) {
          Form m = b[r0][c0] * b[r1][c1] - b[r0][c1] * b[r1][c0];
          if (!m.is_zero()) minors.push_back(std::move(m));
        }
  return Ideal(F, 3, std::move(minors));
}

LineClassification classify_line(const CubicThreefold& x, const LineInP4& l, const GroebnerLimits& limits) {
  std::optional<GoodLineFrame> fr;
  try {
    fr = good_line_frame(x, l);
  } catch (const Error& e) {
    if (e.code() != "line_in_f0") throw;
    return {LineClass::InF0, NotGoodReason::None};
  }
  if (!projective_is_empty(double_line_ideal(*fr), limits)) return {LineClass::NotGood, NotGoodReason::DoubleLineFiber};
  const Form h = discriminant_quintic(*fr);
  if (h.is_zero() || !projective_is_empty(jacobian_ideal(h), limits))
    return {LineClass::NotGood, NotGoodReason::SingularDiscriminant};
  return {LineClass::Good, NotGoodReason::None};
}

}  // namespace goodline
