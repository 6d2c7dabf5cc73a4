// OpenMP kernels. Points of P^{n-1} are swept row by row: the first n-1
// coordinates are fixed (normalized so the first nonzero one is 1) and the
// form becomes a univariate polynomial in the last coordinate, evaluated by
// Horner's rule across all field values. Reductions are integer sums, so
// results do not depend on the thread count.

#include <omp.h>

#include <algorithm>

#include "goodline/kernels.hpp"

namespace goodline::kernels::omp {

namespace {

using Value = Field::Value;

// Terms grouped by the exponent of the last variable.
struct RowForm {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<std::vector<std::pair<Value, Exponents>>> by_last;

  explicit RowForm(const CompiledForm& c) : nvars(c.nvars), degree(c.degree) {
    by_last.resize(degree + 1);
    for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
      const unsigned e = c.exps[t][nvars - 1];
      if (e >= by_last.size()) by_last.resize(e + 1);
      by_last[e].emplace_back(c.coeffs[t], c.exps[t]);
    }
  }

  // Univariate coefficients for a fixed prefix of n-1 coordinates.
  void specialize(const Field& f, const Value* prefix, std::vector<Value>& out) const {
    out.assign(by_last.size(), 0);
    for (std::size_t j = 0; j < by_last.size(); ++j) {
      Value s = 0;
      for (const auto& [coeff, exp] : by_last[j]) {
        Value v = coeff;
        for (std::size_t i = 0; i + 1 < nvars && v != 0; ++i)
          if (exp[i]) v = f.mul(v, f.pow(prefix[i], exp[i]));
        s = f.add(s, v);
      }
      out[j] = s;
    }
  }
};

Value horner(const Field& f, const std::vector<Value>& c, Value x) {
  Value acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = f.add(f.mul(acc, x), c[j]);
  return acc;
}

// Prefix rows of P^{n-1}: the normalized points of the first n-1 coordinates.
struct PrefixRows {
  std::size_t width;  // n - 1
  std::uint64_t q;
  std::vector<std::uint64_t> block_start;  // per lead position

  PrefixRows(std::size_t w, std::uint64_t q_) : width(w), q(q_) {
    std::uint64_t start = 0;
    for (std::size_t lead = 0; lead < width; ++lead) {
      block_start.push_back(start);
      std::uint64_t n = 1;
      for (std::size_t i = lead + 1; i < width; ++i) n *= q;
      start += n;
    }
    block_start.push_back(start);
  }

  std::uint64_t size() const { return block_start.back(); }

  void decode(std::uint64_t idx, Value* out) const {
    std::size_t lead = 0;
    while (idx >= block_start[lead + 1]) ++lead;
    std::uint64_t r = idx - block_start[lead];
    for (std::size_t i = 0; i < width; ++i) out[i] = 0;
    out[lead] = 1;
    for (std::size_t i = lead + 1; i < width; ++i) {
      out[i] = r % q;
      r /= q;
    }
  }
};

// Value of the form at e_{n-1}.
Value last_vertex(const CompiledForm& c) {
  for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
    bool pure = true;
    for (std::size_t i = 0; i + 1 < c.nvars; ++i) pure = pure && c.exps[t][i] == 0;
    if (pure && c.exps[t][c.nvars - 1] == c.degree) return c.coeffs[t];
  }
  return 0;
}

}  // namespace

CoverTally tally_cover(const Field& f, const CompiledForm& h, const CompiledForm& q0, const CompiledForm& q1,
                       const CompiledForm& r) {
  const RowForm hr(h);
  const PrefixRows rows(2, f.cardinality());
  const auto q = f.cardinality();
  const auto nrows = static_cast<std::int64_t>(rows.size());
  std::uint64_t points = 0, split = 0, nonsplit = 0, dbl = 0;

#pragma omp parallel reduction(+ : points, split, nonsplit, dbl)
  {
    std::vector<Value> coeffs;
    Value y[3];
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t row = 0; row < nrows; ++row) {
      rows.decode(static_cast<std::uint64_t>(row), y);
      hr.specialize(f, y, coeffs);
      for (Value b = 0; b < q; ++b) {
        if (horner(f, coeffs, b) != 0) continue;
        y[2] = b;
        ++points;
        const ConicCoefficients c{y[0], y[1], y[2], q0.eval(f, y), q1.eval(f, y), r.eval(f, y)};
        switch (split_type(f, c)) {
          case SplitType::Split: ++split; break;
          case SplitType::Nonsplit: ++nonsplit; break;
          case SplitType::DoubleLine: ++dbl; break;
        }
      }
    }
  }

  if (last_vertex(h) == 0) {
    const Value y[3] = {0, 0, 1};
    ++points;
    const ConicCoefficients c{0, 0, 1, q0.eval(f, y), q1.eval(f, y), r.eval(f, y)};
    switch (split_type(f, c)) {
      case SplitType::Split: ++split; break;
      case SplitType::Nonsplit: ++nonsplit; break;
      case SplitType::DoubleLine: ++dbl; break;
    }
  }
  return {points, split, nonsplit, dbl};
}

std::uint64_t count_projective_zeros(const Field& f, const CompiledForm& form) {
  if (form.nvars == 1) return last_vertex(form) == 0 ? 1 : 0;
  const RowForm fr(form);
  const PrefixRows rows(form.nvars - 1, f.cardinality());
  const auto q = f.cardinality();
  const auto nrows = static_cast<std::int64_t>(rows.size());
  std::uint64_t count = 0;

#pragma omp parallel reduction(+ : count)
  {
    std::vector<Value> coeffs;
    std::vector<Value> prefix(form.nvars);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t row = 0; row < nrows; ++row) {
      rows.decode(static_cast<std::uint64_t>(row), prefix.data());
      fr.specialize(f, prefix.data(), coeffs);
      for (Value x = 0; x < q; ++x)
        if (horner(f, coeffs, x) == 0) ++count;
    }
  }
  if (last_vertex(form) == 0) ++count;
  return count;
}

std::vector<LineEntries> scan_lines(const Field& f, const CompiledForm& cubic) {
  const auto q = f.cardinality();
  // Partials of the cubic; the s^2 t and s t^2 coefficients of f(sa + tb)
  // are sum_i b_i (d_i f)(a) and sum_i a_i (d_i f)(b).
  std::array<CompiledForm, 5> grad;
  for (std::size_t i = 0; i < 5; ++i) {
    grad[i].nvars = 5;
    grad[i].degree = 2;
    for (std::size_t t = 0; t < cubic.coeffs.size(); ++t) {
      const unsigned e = cubic.exps[t][i];
      if (e == 0) continue;
      const Value c = f.mul(cubic.coeffs[t], f.from_int(e));
      if (c == 0) continue;
      Exponents d = cubic.exps[t];
      d[i] = static_cast<std::uint16_t>(e - 1);
      grad[i].exps.push_back(d);
      grad[i].coeffs.push_back(c);
    }
  }

  struct Pattern {
    int p0, p1;
    std::vector<int> free0, free1;
    std::uint64_t n0 = 1, n1 = 1;
  };
  std::vector<Pattern> patterns;
  for (int p0 = 0; p0 < 5; ++p0)
    for (int p1 = p0 + 1; p1 < 5; ++p1) {
      Pattern pt{p0, p1, {}, {}};
      for (int c = p0 + 1; c < 5; ++c)
        if (c != p1) pt.free0.push_back(c);
      for (int c = p1 + 1; c < 5; ++c) pt.free1.push_back(c);
      for (std::size_t i = 0; i < pt.free0.size(); ++i) pt.n0 *= q;
      for (std::size_t i = 0; i < pt.free1.size(); ++i) pt.n1 *= q;
      patterns.push_back(std::move(pt));
    }

  std::vector<LineEntries> out;
  for (const auto& pt : patterns) {
    // Second-row candidates with f(b) = 0, together with grad f(b).
    struct Row1 {
      std::array<Value, 5> b;
      std::array<Value, 5> g;
    };
    std::vector<Row1> second;
    for (std::uint64_t i1 = 0; i1 < pt.n1; ++i1) {
      Row1 r{};
      r.b[pt.p1] = 1;
      std::uint64_t rem = i1;
      for (int c : pt.free1) {
        r.b[c] = rem % q;
        rem /= q;
      }
      if (cubic.eval(f, r.b.data()) != 0) continue;
      for (std::size_t i = 0; i < 5; ++i) r.g[i] = grad[i].eval(f, r.b.data());
      second.push_back(r);
    }
    if (second.empty()) continue;

    const auto n0 = static_cast<std::int64_t>(pt.n0);
#pragma omp parallel
    {
      std::vector<LineEntries> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i0 = 0; i0 < n0; ++i0) {
        std::array<Value, 5> a{};
        a[pt.p0] = 1;
        std::uint64_t rem = static_cast<std::uint64_t>(i0);
        for (int c : pt.free0) {
          a[c] = rem % q;
          rem /= q;
        }
        if (cubic.eval(f, a.data()) != 0) continue;
        std::array<Value, 5> ga;
        for (std::size_t i = 0; i < 5; ++i) ga[i] = grad[i].eval(f, a.data());
        for (const auto& r : second) {
          Value s1 = 0, s2 = 0;
          for (std::size_t i = 0; i < 5; ++i) s1 = f.add(s1, f.mul(r.b[i], ga[i]));
          if (s1 != 0) continue;
          for (std::size_t i = 0; i < 5; ++i) s2 = f.add(s2, f.mul(a[i], r.g[i]));
          if (s2 != 0) continue;
          LineEntries e;
          std::copy(a.begin(), a.end(), e.begin());
          std::copy(r.b.begin(), r.b.end(), e.begin() + 5);
          local.push_back(e);
        }
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> intersection_dims(const Field& f, const std::vector<Matrix>& subspaces) {
  const auto g = static_cast<std::int64_t>(subspaces.size());
  std::vector<int> dims(static_cast<std::size_t>(g * g));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < g; ++i) {
    const Matrix& a = subspaces[static_cast<std::size_t>(i)];
    Matrix stacked;
    for (std::int64_t j = 0; j < g; ++j) {
      const Matrix& b = subspaces[static_cast<std::size_t>(j)];
      stacked = Matrix(a.rows() + b.rows(), a.cols());
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) stacked(r, c) = a(r, c);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) stacked(a.rows() + r, c) = b(r, c);
      dims[static_cast<std::size_t>(i * g + j)] =
          static_cast<int>(a.rows() + b.rows()) - static_cast<int>(rank(f, stacked)) - 1;
    }
  }
  return dims;
}

}  // namespace goodline::kernels::omp
