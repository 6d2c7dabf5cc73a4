#pragma once

// Small dense matrices over a Field.

#include <cstddef>
#include <optional>
#include <vector>

#include "goodline/field.hpp"

namespace goodline {

class Matrix {
 public:
  using Value = Field::Value;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Value& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Value operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::vector<Value> row(std::size_t r) const;
  const std::vector<Value>& data() const noexcept { return a_; }

  bool operator==(const Matrix&) const = default;
  auto operator<=>(const Matrix& o) const { return a_ <=> o.a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> a_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Field::Value> apply(const Field& f, const Matrix& a, const std::vector<Field::Value>& v);

// Reduced row echelon form, zero rows dropped; pivot columns optionally returned.
Matrix rref(const Field& f, Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Field& f, const Matrix& m);
Field::Value determinant(const Field& f, Matrix m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<std::vector<Field::Value>> nullspace(const Field& f, const Matrix& m);

}  // namespace goodline
