#include "doctest.h"

#include <set>

#include "goodline/cartier.hpp"
#include "goodline/error.hpp"
#include "goodline/zeta.hpp"
#include "test_support.hpp"

using namespace goodline;
using namespace goodline::testing;

namespace {

const auto kY = default_variables(3);

Form example_quintic() {
  auto f2 = Field::make(2, 1);
  const auto fr = good_line_frame(CubicThreefold::parse(kExampleCubic, f2), parse_line("0,0,0,1,0;0,0,0,0,1", f2));
  return discriminant_quintic(fr);
}

unsigned l_rank(const GoodLineFrame& fr) {
  const auto table = count_curve_and_cover(fr, 6);
  std::vector<std::uint64_t> n;
  for (const auto& r : table.rows) n.push_back(r.n);
  return p_rank_from_l(l_polynomial_from_counts(fr.field->cardinality(), 6, n), 2);
}

}  // namespace

TEST_CASE("basis and trivial matrices") {
  const auto& b = cartier_basis();
  CHECK(b.size() == 6);
  CHECK(std::set<std::pair<int, int>>(b.begin(), b.end()).size() == 6);
  for (const auto& [k, l] : b) CHECK((k >= 1 && l >= 1 && k + l <= 4));
  CHECK(b[0] == std::pair{1, 1});
  CHECK(b[5] == std::pair{3, 1});

  auto f4 = Field::make(2, 2);
  const auto zero = cartier_ranks(*f4, Matrix(6, 6));
  CHECK(zero.p_rank == 0);
  CHECK(zero.a_number == 6);
  const auto id = cartier_ranks(*f4, Matrix::identity(6));
  CHECK(id.p_rank == 6);
  CHECK(id.a_number == 0);
}

TEST_CASE("entry rule on the example quintic") {
  const Form h = example_quintic();
  const PlaneQuintic c(h);
  CHECK(c.chart() == QuinticChart{2, 0, 1});
  const Matrix m = cartier_matrix(c);
  const auto& b = cartier_basis();
  // Over GF(2) square roots are trivial, so entries are the coefficients of H(x, y, 1).
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t s = 0; s < 6; ++s) {
      const int a = 2 * b[r].first - b[s].first, e = 2 * b[r].second - b[s].second;
      Field::Value expect = 0;
      if (a >= 0 && e >= 0 && a + e <= 5) {
        Exponents ex{};
        ex[0] = static_cast<std::uint16_t>(a);
        ex[1] = static_cast<std::uint16_t>(e);
        ex[2] = static_cast<std::uint16_t>(5 - a - e);
        expect = h.coefficient(ex);
      }
      CHECK(m(r, s) == expect);
    }
  const auto ranks = cartier_ranks(*h.field(), m);
  CHECK(ranks.p_rank <= 6 - ranks.a_number);
}

TEST_CASE("square roots in the entry rule over GF(4)") {
  auto f4 = Field::make(2, 2);
  const auto g = f4->gen();
  // F_{0,0} = g sits at M[(1,1),(2,2)].
  const Form h = parse_form("t*x2^5 + x0^5 + x1^5 + x0*x1^3*x2", f4, kY);
  const PlaneQuintic c(h, std::nullopt, false);
  const Matrix m = cartier_matrix(c);
  CHECK(f4->sqr(m(0, 4)) == g);
  CHECK(m(0, 4) != g);
}

TEST_CASE("chart selection and errors") {
  auto f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  // No odd power of x1, so the default chart is invalid and x0 takes the y role.
  const Form h = parse_form("x0^5 + x1^4*x2 + x2^5 + x0*x1^2*x2^2", f2, kY);
  const PlaneQuintic c(h, std::nullopt, false);
  CHECK(c.chart() == QuinticChart{2, 1, 0});
  try {
    PlaneQuintic(h, QuinticChart{2, 0, 1}, false);
    FAIL("invalid chart accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "chart_invalid");
  }
  CHECK_THROWS_AS(PlaneQuintic(parse_form("x0^5", f3, kY)), Error);
  CHECK_THROWS_AS(PlaneQuintic(parse_form("x0^4*x1", f2, kY)), Error);  // singular
  CHECK_THROWS_AS(PlaneQuintic(parse_form("x0^3", f2, kY)), Error);
}

TEST_CASE("Manin consistency: Cartier p-rank equals deg(L_C mod 2)") {
  auto f2 = Field::make(2, 1), f4 = Field::make(2, 2);
  const auto fr_example = good_line_frame(CubicThreefold::parse(kExampleCubic, f2), parse_line("0,0,0,1,0;0,0,0,0,1", f2));
  std::vector<GoodLineFrame> frames{fr_example};
  for (const auto& [x, fr] : good_frames(f2, 6, 31)) frames.push_back(fr);
  for (const auto& [x, fr] : good_frames(f4, 3, 32)) frames.push_back(fr);
  std::set<unsigned> seen;
  for (const auto& fr : frames) {
    const Form h = discriminant_quintic(fr);
    const unsigned expect = l_rank(fr);
    seen.insert(expect);
    const auto charts = PlaneQuintic::valid_charts(h);
    REQUIRE_FALSE(charts.empty());
    std::optional<CartierRanks> first;
    for (const auto& chart : charts) {
      const Matrix m = cartier_matrix(PlaneQuintic(h, chart));
      const auto fwd = cartier_ranks(*fr.field, m, TwistOrder::Frobenius);
      const auto opp = cartier_ranks(*fr.field, m, TwistOrder::Opposite);
      CHECK(fwd.p_rank == expect);
      CHECK(opp.p_rank == expect);
      CHECK(fwd.p_rank <= 6 - fwd.a_number);
      if (!first) first = fwd;
      CHECK(fwd.p_rank == first->p_rank);
      CHECK(fwd.a_number == first->a_number);
    }
  }
  CHECK(seen.size() > 1);
}
