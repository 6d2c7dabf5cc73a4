#pragma once

// Enumeration kernels. Each kernel has an OpenMP implementation (namespace
// omp) used by the library, and a plain serial reference implementation
// (namespace reference) that evaluates points directly. Tests pin the two
// against each other; bench/ compares their speed.

#include <array>
#include <cstdint>
#include <vector>

#include "goodline/field.hpp"
#include "goodline/linalg.hpp"
#include "goodline/poly.hpp"

namespace goodline {

enum class SplitType { Split, Nonsplit, DoubleLine };

// The fiber conic y0 u^2 + y1 uv + y2 v^2 + q0 ut + q1 vt + r t^2 at a point of P^2.
struct ConicCoefficients {
  Field::Value y0 = 0, y1 = 0, y2 = 0, q0 = 0, q1 = 0, r = 0;
};

// Decides the splitting of a degenerate conic in O(1) field operations.
// Caller guarantees the conic is singular (the point lies on the discriminant).
SplitType split_type(const Field& f, const ConicCoefficients& c);

namespace kernels {

enum class Exec { Serial, Parallel };

// 0 restores the OpenMP default.
void set_threads(int n);
int max_threads();

// A form with coefficients mapped into an evaluation field.
struct CompiledForm {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<Exponents> exps;
  std::vector<Field::Value> coeffs;

  static CompiledForm compile(const Form& form, const Embedding& emb);
  Field::Value eval(const Field& f, const Field::Value* point) const;
};

struct CoverTally {
  std::uint64_t points = 0;  // points of the discriminant curve
  std::uint64_t split = 0;
  std::uint64_t nonsplit = 0;
  std::uint64_t double_line = 0;
  bool operator==(const CoverTally&) const = default;
};

// Binary cubic lines as 2x5 RREF entries, row-major.
using LineEntries = std::array<Field::Value, 10>;

namespace omp {
CoverTally tally_cover(const Field& f, const CompiledForm& h, const CompiledForm& q0, const CompiledForm& q1,
                       const CompiledForm& r);
std::uint64_t count_projective_zeros(const Field& f, const CompiledForm& form);
// All F-rational lines on the cubic V+(form), sorted.
std::vector<LineEntries> scan_lines(const Field& f, const CompiledForm& cubic);
// Projective dimension of g_i ∩ g_j for every ordered pair, row-major.
std::vector<int> intersection_dims(const Field& f, const std::vector<Matrix>& subspaces);
}  // namespace omp

namespace reference {
CoverTally tally_cover(const Field& f, const CompiledForm& h, const CompiledForm& q0, const CompiledForm& q1,
                       const CompiledForm& r);
std::uint64_t count_projective_zeros(const Field& f, const CompiledForm& form);
std::vector<LineEntries> scan_lines(const Field& f, const CompiledForm& cubic);
std::vector<int> intersection_dims(const Field& f, const std::vector<Matrix>& subspaces);
}  // namespace reference

inline CoverTally tally_cover(Exec e, const Field& f, const CompiledForm& h, const CompiledForm& q0,
                              const CompiledForm& q1, const CompiledForm& r) {
  return e == Exec::Parallel ? omp::tally_cover(f, h, q0, q1, r) : reference::tally_cover(f, h, q0, q1, r);
}
inline std::uint64_t count_projective_zeros(Exec e, const Field& f, const CompiledForm& form) {
  return e == Exec::Parallel ? omp::count_projective_zeros(f, form) : reference::count_projective_zeros(f, form);
}
inline std::vector<LineEntries> scan_lines(Exec e, const Field& f, const CompiledForm& cubic) {
  return e == Exec::Parallel ? omp::scan_lines(f, cubic) : reference::scan_lines(f, cubic);
}
inline std::vector<int> intersection_dims(Exec e, const Field& f, const std::vector<Matrix>& subspaces) {
  return e == Exec::Parallel ? omp::intersection_dims(f, subspaces) : reference::intersection_dims(f, subspaces);
}

// Number of points of P^{n-1}(GF(q)).
std::uint64_t projective_point_count(std::uint64_t q, std::size_t n);

}  // namespace kernels
}  // namespace goodline
