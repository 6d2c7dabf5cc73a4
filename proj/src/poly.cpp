#include "goodline/poly.hpp"

#include <algorithm>
#include <map>

#include "goodline/error.hpp"

namespace goodline {

unsigned total_degree(const Exponents& e) noexcept {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool monomial_greater(MonomialOrder order, const Exponents& a, const Exponents& b, std::size_t nvars) noexcept {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < nvars; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = nvars; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

struct GrevlexLess {
  std::size_t n;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return monomial_greater(MonomialOrder::Grevlex, b, a, n);
  }
};

using TermMap = std::map<Exponents, Field::Value, GrevlexLess>;

std::vector<Term> from_map(const TermMap& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->second != 0) out.push_back({it->first, it->second});
  return out;
}

}  // namespace

Form::Form(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars_ > kMaxVars) fail_input("too_many_variables", "at most 8 variables are supported");
}

Form::Form(FieldPtr field, std::size_t nvars, std::vector<Term> terms) : Form(std::move(field), nvars) {
  TermMap m(GrevlexLess{nvars_});
  for (const auto& t : terms) {
    auto& slot = m[t.exp];
    slot = field_->add(slot, t.coeff);
  }
  terms_ = from_map(m);
}

Form Form::constant(FieldPtr field, std::size_t nvars, Value c) {
  return Form(std::move(field), nvars, {Term{Exponents{}, c}});
}

Form Form::variable(FieldPtr field, std::size_t nvars, std::size_t i) {
  Exponents e{};
  e[i] = 1;
  return Form(std::move(field), nvars, {Term{e, 1}});
}

Form Form::monomial(FieldPtr field, std::size_t nvars, const Exponents& e, Value c) {
  return Form(std::move(field), nvars, {Term{e, c}});
}

int Form::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(total_degree(t.exp)));
  return d;
}

bool Form::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.front().exp);
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return total_degree(t.exp) == d; });
}

Form::Value Form::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return 0;
}

unsigned Form::degree_in(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[i]);
  return d;
}

void Form::check_compatible(const Form& o) const {
  if (nvars_ != o.nvars_) fail_input("dimension_mismatch", "forms have different variable counts");
  if (field_ != o.field_ && !(*field_ == *o.field_)) fail_input("mixed_fields", "forms over different fields");
}

Form Form::operator+(const Form& o) const {
  check_compatible(o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return Form(field_, nvars_, std::move(all));
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
  Form r(field_, nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

Form Form::scaled(Value c) const {
  if (c == 0) return Form(field_, nvars_);
  Form r(field_, nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
  return r;
}

Form Form::operator*(const Form& o) const {
  check_compatible(o);
  TermMap m(GrevlexLess{nvars_});
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
      auto& slot = m[e];
      slot = field_->add(slot, field_->mul(a.coeff, b.coeff));
    }
  Form r(field_, nvars_);
  r.terms_ = from_map(m);
  return r;
}

Form Form::pow(unsigned e) const {
  Form result = constant(field_, nvars_, 1);
  Form base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Form::operator==(const Form& o) const {
  return nvars_ == o.nvars_ && (field_ == o.field_ || *field_ == *o.field_) && terms_ == o.terms_;
}

Form Form::partial(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    const Value c = field_->mul(t.coeff, field_->from_int(t.exp[i]));
    if (c == 0) continue;
    Term d = t;
    d.exp[i] = static_cast<std::uint16_t>(d.exp[i] - 1);
    d.coeff = c;
    out.push_back(d);
  }
  return Form(field_, nvars_, std::move(out));
}

Form Form::component(unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (total_degree(t.exp) == d) out.push_back(t);
  Form r(field_, nvars_);
  r.terms_ = std::move(out);
  return r;
}

Form::Value Form::evaluate(std::span<const Value> point) const {
  if (point.size() != nvars_) fail_input("dimension_mismatch", "point length differs from the variable count");
  const Field& f = *field_;
  Value sum = 0;
  for (const auto& t : terms_) {
    Value v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
      if (t.exp[i]) v = f.mul(v, f.pow(point[i], t.exp[i]));
    sum = f.add(sum, v);
  }
  return sum;
}

Form::Value Form::evaluate(const Embedding& emb, std::span<const Value> point) const {
  if (!(*emb.source() == *field_)) fail_input("mixed_fields", "embedding source differs from the form's field");
  if (point.size() != nvars_) fail_input("dimension_mismatch", "point length differs from the variable count");
  const Field& f = *emb.target();
  Value sum = 0;
  for (const auto& t : terms_) {
    Value v = emb(t.coeff);
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
      if (t.exp[i]) v = f.mul(v, f.pow(point[i], t.exp[i]));
    sum = f.add(sum, v);
  }
  return sum;
}

Form Form::compose(const std::vector<Form>& images) const {
  if (images.size() != nvars_) fail_input("dimension_mismatch", "need one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  for (const auto& g : images)
    if (g.nvars() != m) fail_input("dimension_mismatch", "images have different variable counts");
  // powers[i][e] = images[i]^e
  std::vector<std::vector<Form>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(constant(field_, m, 1));
    for (unsigned e = 1; e <= degree_in(i); ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  Form result(field_, m);
  for (const auto& t : terms_) {
    Form prod = constant(field_, m, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.exp[i]) prod = prod * powers[i][t.exp[i]];
    result = result + prod;
  }
  return result;
}

Form Form::substitute_linear(const Matrix& mat) const {
  if (mat.rows() != nvars_ || mat.cols() != nvars_) fail_input("dimension_mismatch", "matrix size differs from the variable count");
  if (!inverse(*field_, mat)) fail_input("singular_matrix", "linear substitution matrix is singular");
  std::vector<Form> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::vector<Term> lin;
    for (std::size_t j = 0; j < nvars_; ++j) {
      Exponents e{};
      e[j] = 1;
      lin.push_back({e, mat(i, j)});
    }
    images.emplace_back(field_, nvars_, std::move(lin));
  }
  return compose(images);
}

Form Form::dehomogenize(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Term d{};
    d.coeff = t.coeff;
    for (std::size_t j = 0, k = 0; j < nvars_; ++j)
      if (j != i) d.exp[k++] = t.exp[j];
    out.push_back(d);
  }
  return Form(field_, nvars_ - 1, std::move(out));
}

Form Form::embedded(const Embedding& emb) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = emb(t.coeff);
  return Form(emb.target(), nvars_, std::move(out));
}

std::string Form::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    std::string c = field_->format(t.coeff);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (mono.empty()) out += c;
    else if (t.coeff == 1) out += mono;
    else out += c + "*" + mono;
  }
  return out;
}

std::string Form::str() const { return str(default_variables(nvars_)); }

std::vector<std::string> default_variables(std::size_t n, std::string_view prefix) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(prefix) + std::to_string(i));
  return v;
}

Ideal::Ideal(FieldPtr f, std::size_t n, std::vector<Form> g, MonomialOrder o)
    : field(std::move(f)), nvars(n), gens(std::move(g)), order(o) {
  for (const auto& h : gens)
    if (h.nvars() != nvars || !(*h.field() == *field))
      fail_input("mixed_fields", "ideal generators must share field and variables");
}

Ideal jacobian_ideal(const Form& f) {
  std::vector<Form> gens;
  if (!f.is_zero()) gens.push_back(f);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Form d = f.partial(i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return Ideal(f.field(), f.nvars(), std::move(gens));
}

}  // namespace goodline
