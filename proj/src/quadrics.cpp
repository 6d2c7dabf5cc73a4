#include "goodline/quadrics.hpp"

#include <algorithm>
#include <set>

#include "goodline/error.hpp"

namespace goodline {

namespace {
using Value = Field::Value;
}  // namespace

QuadraticSpace::QuadraticSpace(FieldPtr field, std::size_t dim, const std::vector<Value>& upper)
    : field_(std::move(field)), dim_(dim), c_(dim, dim) {
  if (dim == 0) fail_input("bad_dimension", "quadratic space of dimension 0");
  if (upper.size() != dim * (dim + 1) / 2)
    fail_input("bad_quadric", "expected " + std::to_string(dim * (dim + 1) / 2) + " upper-triangular coefficients");
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      if (!field_->contains(upper[k])) fail_input("bad_element", "coefficient outside the field");
      c_(i, j) = upper[k++];
    }
}

QuadraticSpace::Value QuadraticSpace::value(const std::vector<Value>& v) const {
  const Field& f = *field_;
  Value s = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (c_(i, j)) s = f.add(s, f.mul(c_(i, j), f.mul(v[i], v[j])));
  return s;
}

QuadraticSpace::Value QuadraticSpace::polar(const std::vector<Value>& u, const std::vector<Value>& v) const {
  const auto bv = apply(*field_, polar_matrix(), v);
  Value s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s = field_->add(s, field_->mul(u[i], bv[i]));
  return s;
}

Matrix QuadraticSpace::polar_matrix() const {
  const Field& f = *field_;
  Matrix b(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      b(i, j) = i == j ? f.add(c_(i, i), c_(i, i)) : c_(std::min(i, j), std::max(i, j));
  return b;
}

PolarResult polar_and_smoothness(const QuadraticSpace& q) {
  if (q.dim() % 2 != 0) fail_input("odd_dimension", "smoothness is decided for even dimension only");
  PolarResult r{q.polar_matrix(), false};
  r.smooth = determinant(*q.field(), r.polar) != 0;
  return r;
}

std::vector<Matrix> enumerate_generators(const QuadraticSpace& q, const QuadricBudget& budget) {
  const Field& f = *q.field();
  if (q.dim() > budget.max_dim || f.cardinality() > budget.max_field_size)
    fail_resource("quadric_budget", "generator enumeration is limited to dimension " +
                                        std::to_string(budget.max_dim) + " over fields of size at most " +
                                        std::to_string(budget.max_field_size));
  const auto pr = polar_and_smoothness(q);
  if (!pr.smooth) fail_input("singular_quadric", "generators are enumerated for smooth quadrics only");
  const std::size_t d = q.dim(), n = d / 2;
  const std::uint64_t qq = f.cardinality();

  std::set<Matrix> level{Matrix(0, d)};
  for (std::size_t r = 0; r < n; ++r) {
    std::set<Matrix> next;
    for (const Matrix& s : level) {
      // S^perp = {v : b(s_i, v) = 0}.
      std::vector<std::vector<Value>> perp;
      if (s.rows()) {
        perp = nullspace(f, multiply(f, s, pr.polar));
      } else {
        for (std::size_t i = 0; i < d; ++i) perp.push_back(Matrix::identity(d).row(i));
      }
      const std::size_t k = perp.size();
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= qq;
      std::vector<Value> v(d), coeff(k);
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rem = idx;
        for (std::size_t i = 0; i < k; ++i) {
          coeff[i] = rem % qq;
          rem /= qq;
        }
        // Projective representatives: last nonzero coefficient equal to 1.
        std::size_t last = k - 1;
        while (coeff[last] == 0) --last;
        if (coeff[last] != 1) continue;
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t i = 0; i < k; ++i)
          if (coeff[i])
            for (std::size_t c = 0; c < d; ++c) v[c] = f.add(v[c], f.mul(coeff[i], perp[i][c]));
        if (q.value(v) != 0) continue;
        Matrix ext(s.rows() + 1, d);
        for (std::size_t a = 0; a < s.rows(); ++a)
          for (std::size_t c = 0; c < d; ++c) ext(a, c) = s(a, c);
        for (std::size_t c = 0; c < d; ++c) ext(s.rows(), c) = v[c];
        Matrix red = rref(f, ext);
        if (red.rows() == s.rows() + 1) next.insert(std::move(red));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

ParityReport verify_generator_parity(const Field& f, const std::vector<Matrix>& gens, kernels::Exec exec) {
  ParityReport rep;
  if (gens.empty()) return rep;
  const std::size_t g = gens.size();
  const auto dims = kernels::intersection_dims(exec, f, gens);
  const int dim_g = static_cast<int>(gens[0].rows()) - 1;
  const auto parity = [](int x) { return ((x % 2) + 2) % 2; };
  rep.labels.resize(g);
  for (std::size_t i = 0; i < g; ++i) rep.labels[i] = parity(dims[i] - dim_g);
  rep.class_sizes.assign(2, 0);
  for (int a : rep.labels) ++rep.class_sizes[static_cast<std::size_t>(a)];
  rep.two_classes = rep.class_sizes[0] > 0 && rep.class_sizes[1] > 0;
  rep.equal_sizes = rep.class_sizes[0] == rep.class_sizes[1];
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const int d = dims[i * g + j];
      if (parity(d) != parity(dim_g + rep.labels[i] + rep.labels[j])) rep.violations.push_back({i, j, d});
    }
  return rep;
}

}  // namespace goodline
