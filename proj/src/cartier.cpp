#include "goodline/cartier.hpp"

#include "goodline/error.hpp"

namespace goodline {

namespace {

std::vector<QuinticChart> all_charts() {
  std::vector<QuinticChart> out;
  for (std::size_t fixed : {2u, 0u, 1u}) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != fixed) rest.push_back(i);
    out.push_back({fixed, rest[0], rest[1]});
    out.push_back({fixed, rest[1], rest[0]});
  }
  return out;
}

// F_y is identically zero iff every monomial has an even y-degree.
bool chart_ok(const Form& h, const QuinticChart& c) {
  for (const auto& t : h.terms())
    if (t.exp[c.yvar] % 2 == 1) return true;
  return false;
}

}  // namespace

std::vector<QuinticChart> PlaneQuintic::valid_charts(const Form& h) {
  std::vector<QuinticChart> out;
  for (const auto& c : all_charts())
    if (chart_ok(h, c)) out.push_back(c);
  return out;
}

PlaneQuintic::PlaneQuintic(Form h, std::optional<QuinticChart> chart, bool require_smooth,
                           const GroebnerLimits& limits)
    : h_(std::move(h)) {
  if (!h_.field()->is_char2()) fail_input("wrong_characteristic", "the Cartier matrix needs characteristic 2");
  if (h_.nvars() != 3 || h_.is_zero() || !h_.is_homogeneous() || h_.degree() != 5)
    fail_input("not_quintic", "expected a homogeneous quintic in 3 variables");
  if (require_smooth && !projective_is_empty(jacobian_ideal(h_), limits))
    fail_input("singular_curve", "the quintic is singular");
  if (chart) {
    if (!chart_ok(h_, *chart)) fail_input("chart_invalid", "F_y vanishes identically on the requested chart");
    chart_ = *chart;
  } else {
    const auto charts = valid_charts(h_);
    if (charts.empty()) fail_input("chart_invalid", "F_y vanishes identically on every chart");
    chart_ = charts.front();
  }
  for (const auto& t : h_.terms()) f_[t.exp[chart_.xvar]][t.exp[chart_.yvar]] = t.coeff;
}

Field::Value PlaneQuintic::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i + j > 5) return 0;
  return f_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const std::array<std::pair<int, int>, 6>& cartier_basis() {
  static const std::array<std::pair<int, int>, 6> basis{{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}};
  return basis;
}

Matrix cartier_matrix(const PlaneQuintic& c) {
  const Field& f = *c.form().field();
  const auto& basis = cartier_basis();
  Matrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t s = 0; s < 6; ++s) {
      const auto [i, j] = basis[r];
      const auto [k, l] = basis[s];
      m(r, s) = f.sqrt_char2(c.coefficient(2 * i - k, 2 * j - l));
    }
  return m;
}

CartierRanks cartier_ranks(const Field& f, const Matrix& m, TwistOrder order) {
  const std::size_t g = m.rows();
  const auto twist = [&](const Matrix& a, unsigned times) {
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        for (unsigned t = 0; t < times; ++t) out(r, c) = f.frobenius(out(r, c));
    return out;
  };
  Matrix prod = Matrix::identity(g);
  for (unsigned e = 0; e < g; ++e) {
    const Matrix tw = twist(m, e);
    prod = order == TwistOrder::Frobenius ? multiply(f, tw, prod) : multiply(f, prod, tw);
  }
  return {static_cast<unsigned>(rank(f, prod)), static_cast<unsigned>(g - rank(f, m))};
}

}  // namespace goodline
