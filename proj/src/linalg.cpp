#include "goodline/linalg.hpp"

namespace goodline {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Matrix::Value> Matrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

std::vector<Field::Value> apply(const Field& f, const Matrix& a, const std::vector<Field::Value>& v) {
  std::vector<Field::Value> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

Matrix rref(const Field& f, Matrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t s = r;
    while (s < m.rows() && m(s, c) == 0) ++s;
    if (s == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(s, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t t = 0; t < m.rows(); ++t) {
      if (t == r || m(t, c) == 0) continue;
      const auto factor = m(t, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(t, j) = f.sub(m(t, j), f.mul(factor, m(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rows(); }

Field::Value determinant(const Field& f, Matrix m) {
  const std::size_t n = m.rows();
  Field::Value det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t s = c;
    while (s < n && m(s, c) == 0) ++s;
    if (s == n) return f.zero();
    if (s != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(s, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t t = c + 1; t < n; ++t) {
      if (m(t, c) == 0) continue;
      const auto factor = f.mul(m(t, c), inv);
      for (std::size_t j = c; j < n; ++j) m(t, j) = f.sub(m(t, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  std::vector<std::size_t> piv;
  const Matrix r = rref(f, aug, &piv);
  if (r.rows() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

std::vector<std::vector<Field::Value>> nullspace(const Field& f, const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(f, m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Field::Value>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field::Value> v(m.cols(), 0);
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace goodline
