#pragma once

// Quadratic forms over finite fields, generators (maximal totally singular
// subspaces) of smooth quadrics in P^{2n-1}, and the parity law splitting
// them into two families. Dimensions are projective; the empty set has
// dimension -1.

#include <vector>

#include "goodline/kernels.hpp"
#include "goodline/linalg.hpp"

namespace goodline {

class QuadraticSpace {
 public:
  using Value = Field::Value;

  // Upper-triangular coefficients c_ij (i <= j) of q = sum c_ij x_i x_j,
  // row by row: c_00, c_01, ..., c_0(d-1), c_11, ...
  QuadraticSpace(FieldPtr field, std::size_t dim, const std::vector<Value>& upper);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Value coeff(std::size_t i, std::size_t j) const { return c_(i, j); }
  Value value(const std::vector<Value>& v) const;
  // b(u, v) = q(u + v) - q(u) - q(v).
  Value polar(const std::vector<Value>& u, const std::vector<Value>& v) const;
  Matrix polar_matrix() const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  Matrix c_;
};

struct PolarResult {
  Matrix polar;
  bool smooth = false;
};

// Errors: InputData("odd_dimension").
PolarResult polar_and_smoothness(const QuadraticSpace& q);

struct QuadricBudget {
  std::size_t max_dim = 8;
  std::uint64_t max_field_size = 4;
};

// All totally singular subspaces of vector dimension n = dim / 2, as sorted
// RREF matrices. Errors: InputData("singular_quadric"), Resource("quadric_budget").
std::vector<Matrix> enumerate_generators(const QuadraticSpace& q, const QuadricBudget& budget = {});

struct ParityViolation {
  std::size_t i = 0, j = 0;
  int dim = 0;
  bool operator==(const ParityViolation&) const = default;
};

struct ParityReport {
  std::vector<int> labels;                  // 0 for the class of the first generator
  std::vector<std::size_t> class_sizes;     // indexed by label
  std::vector<ParityViolation> violations;  // pairs breaking dim(g∩h) ≡ dim g + a + b
  bool two_classes = false;
  bool equal_sizes = false;
  bool pass() const { return two_classes && equal_sizes && violations.empty(); }
  bool operator==(const ParityReport&) const = default;
};

ParityReport verify_generator_parity(const Field& f, const std::vector<Matrix>& gens,
                                     kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace goodline
