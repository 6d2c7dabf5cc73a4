// Straightforward serial versions of the enumeration kernels: every point is
// evaluated term by term, with no per-row precomputation.

#include <algorithm>
#include <functional>

#include "goodline/kernels.hpp"

namespace goodline::kernels::reference {

namespace {

void for_each_point(const Field& f, std::size_t n, const std::function<void(const std::vector<Field::Value>&)>& fn) {
  const auto q = f.cardinality();
  std::vector<Field::Value> v(n);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    std::uint64_t total = 1;
    for (std::size_t i = lead + 1; i < n; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = lead + 1; i < n; ++i) {
        v[i] = r % q;
        r /= q;
      }
      fn(v);
    }
  }
}

// Coefficients of s^3, s^2 t, s t^2, t^3 in f(s a + t b).
std::array<Field::Value, 4> binary_cubic(const Field& f, const CompiledForm& cubic, const Field::Value* a,
                                         const Field::Value* b) {
  std::array<Field::Value, 4> out{0, 0, 0, 0};
  for (std::size_t t = 0; t < cubic.coeffs.size(); ++t) {
    std::vector<Field::Value> prod{cubic.coeffs[t]};  // coefficients in t, ascending
    for (std::size_t i = 0; i < cubic.nvars; ++i)
      for (unsigned e = 0; e < cubic.exps[t][i]; ++e) {
        std::vector<Field::Value> next(prod.size() + 1, 0);
        for (std::size_t j = 0; j < prod.size(); ++j) {
          next[j] = f.add(next[j], f.mul(prod[j], a[i]));
          next[j + 1] = f.add(next[j + 1], f.mul(prod[j], b[i]));
        }
        prod = std::move(next);
      }
    for (std::size_t j = 0; j < prod.size() && j < 4; ++j) out[j] = f.add(out[j], prod[j]);
  }
  return out;
}

}  // namespace

CoverTally tally_cover(const Field& f, const CompiledForm& h, const CompiledForm& q0, const CompiledForm& q1,
                       const CompiledForm& r) {
  CoverTally tally;
  for_each_point(f, 3, [&](const std::vector<Field::Value>& y) {
    if (h.eval(f, y.data()) != 0) return;
    ++tally.points;
    const ConicCoefficients c{y[0], y[1], y[2], q0.eval(f, y.data()), q1.eval(f, y.data()), r.eval(f, y.data())};
    switch (split_type(f, c)) {
      case SplitType::Split: ++tally.split; break;
      case SplitType::Nonsplit: ++tally.nonsplit; break;
      case SplitType::DoubleLine: ++tally.double_line; break;
    }
  });
  return tally;
}

std::uint64_t count_projective_zeros(const Field& f, const CompiledForm& form) {
  std::uint64_t count = 0;
  for_each_point(f, form.nvars, [&](const std::vector<Field::Value>& v) {
    if (form.eval(f, v.data()) == 0) ++count;
  });
  return count;
}

std::vector<LineEntries> scan_lines(const Field& f, const CompiledForm& cubic) {
  const auto q = f.cardinality();
  std::vector<LineEntries> out;
  for (int p0 = 0; p0 < 5; ++p0)
    for (int p1 = p0 + 1; p1 < 5; ++p1) {
      std::vector<int> free0, free1;
      for (int c = p0 + 1; c < 5; ++c)
        if (c != p1) free0.push_back(c);
      for (int c = p1 + 1; c < 5; ++c) free1.push_back(c);
      std::uint64_t n0 = 1, n1 = 1;
      for (std::size_t i = 0; i < free0.size(); ++i) n0 *= q;
      for (std::size_t i = 0; i < free1.size(); ++i) n1 *= q;
      for (std::uint64_t i0 = 0; i0 < n0; ++i0)
        for (std::uint64_t i1 = 0; i1 < n1; ++i1) {
          LineEntries e{};
          e[p0] = 1;
          e[5 + p1] = 1;
          std::uint64_t r = i0;
          for (int c : free0) {
            e[c] = r % q;
            r /= q;
          }
          r = i1;
          for (int c : free1) {
            e[5 + c] = r % q;
            r /= q;
          }
          const auto coeffs = binary_cubic(f, cubic, e.data(), e.data() + 5);
          if (std::all_of(coeffs.begin(), coeffs.end(), [](Field::Value v) { return v == 0; })) out.push_back(e);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> intersection_dims(const Field& f, const std::vector<Matrix>& subspaces) {
  const std::size_t g = subspaces.size();
  std::vector<int> dims(g * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const Matrix& a = subspaces[i];
      const Matrix& b = subspaces[j];
      Matrix stacked(a.rows() + b.rows(), a.cols());
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) stacked(r, c) = a(r, c);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) stacked(a.rows() + r, c) = b(r, c);
      dims[i * g + j] = static_cast<int>(a.rows() + b.rows()) - static_cast<int>(rank(f, stacked)) - 1;
    }
  return dims;
}

}  // namespace goodline::kernels::reference
