#include "goodline/kernels.hpp"

namespace goodline {

namespace {

// Quadratic form on (u, v, t): diagonal d[i], off-diagonal o(i, j).
struct ConicForm {
  std::array<Field::Value, 3> diag;
  Field::Value uv, ut, vt;

  Field::Value off(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return uv;
    if (i == 0) return ut;
    return vt;
  }
};

// The form factors through V / <k>; restrict it to the span of the two
// standard vectors complementary to a nonzero coordinate of k.
void complement(const std::array<Field::Value, 3>& k, int& a, int& b) {
  const int lead = k[0] ? 0 : (k[1] ? 1 : 2);
  a = lead == 0 ? 1 : 0;
  b = lead == 2 ? 1 : 2;
}

}  // namespace

SplitType split_type(const Field& f, const ConicCoefficients& c) {
  const ConicForm q{{c.y0, c.y2, c.r}, c.y1, c.q0, c.q1};
  if (f.is_char2()) {
    // Kernel of the alternating polar form; it is the conic's singular point.
    const std::array<Field::Value, 3> k{c.q1, c.q0, c.y1};
    if (k[0] == 0 && k[1] == 0 && k[2] == 0) return SplitType::DoubleLine;
    int a, b;
    complement(k, a, b);
    const auto alpha = q.diag[a], gamma = q.diag[b], beta = q.off(a, b);
    // beta != 0 because the polar form has rank 2 with kernel <k>.
    if (alpha == 0 || gamma == 0) return SplitType::Split;
    const auto x = f.div(f.mul(alpha, gamma), f.sqr(beta));
    return f.trace(x) == 0 ? SplitType::Split : SplitType::Nonsplit;
  }
  // Odd characteristic: B = 2A with A the symmetric matrix of the conic.
  const auto two = f.from_int(2);
  std::array<std::array<Field::Value, 3>, 3> B{};
  for (int i = 0; i < 3; ++i) B[i][i] = f.mul(two, q.diag[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) B[i][j] = q.off(i, j);
  std::array<Field::Value, 3> k{0, 0, 0};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = i + 1; j < 3 && !found; ++j) {
      const auto& r = B[i];
      const auto& s = B[j];
      k = {f.sub(f.mul(r[1], s[2]), f.mul(r[2], s[1])), f.sub(f.mul(r[2], s[0]), f.mul(r[0], s[2])),
           f.sub(f.mul(r[0], s[1]), f.mul(r[1], s[0]))};
      found = k[0] || k[1] || k[2];
    }
  if (!found) return SplitType::DoubleLine;
  int a, b;
  complement(k, a, b);
  const auto alpha = q.diag[a], gamma = q.diag[b], beta = q.off(a, b);
  const auto disc = f.sub(f.sqr(beta), f.mul(f.from_int(4), f.mul(alpha, gamma)));
  return f.is_square(disc) ? SplitType::Split : SplitType::Nonsplit;
}

}  // namespace goodline
