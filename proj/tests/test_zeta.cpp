#include "doctest.h"

#include <cmath>
#include <optional>
#include <random>

#include "goodline/error.hpp"
#include "goodline/zeta.hpp"
#include "test_support.hpp"

using namespace goodline;
using namespace goodline::testing;

namespace {

const char* kExampleLine = "0,0,0,1,0;0,0,0,0,1";

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Points of the plane curve V+(f) over GF(2^m), m = 1..m_max, by brute force.
std::vector<std::uint64_t> plane_counts(const char* text, unsigned m_max) {
  auto f2 = Field::make(2, 1);
  const Form f = parse_form(text, f2, default_variables(3));
  std::vector<std::uint64_t> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    auto ext = extension_field(*f2, m);
    const auto emb = m == 1 ? Embedding::identity(ext) : Embedding::find(f2, ext);
    std::uint64_t n = 0;
    for_each_projective_point(*ext, 3, [&](const std::vector<Field::Value>& y) {
      if (f.evaluate(emb, y) == 0) ++n;
    });
    out.push_back(n);
  }
  return out;
}

std::uint64_t brute_threefold(const CubicThreefold& x, unsigned m) {
  auto ext = extension_field(*x.field(), m);
  const auto emb = *ext == *x.field() ? Embedding::identity(ext) : Embedding::find(x.field(), ext);
  std::uint64_t n = 0;
  for_each_projective_point(*ext, 5, [&](const std::vector<Field::Value>& v) {
    if (x.form().evaluate(emb, v) == 0) ++n;
  });
  return n;
}

GoodLineFrame example_frame() {
  auto f2 = Field::make(2, 1);
  return good_line_frame(CubicThreefold::parse(kExampleCubic, f2), parse_line(kExampleLine, f2));
}

}  // namespace

TEST_CASE("small genera") {
  CHECK(l_polynomial_from_counts(2, 0, {}).coeffs == big({1}));
  CHECK(l_polynomial_from_counts(5, 0, {6, 26}).coeffs == big({1}));
  for (long a : {-4, -1, 0, 2, 4}) {
    const auto l = l_polynomial_from_counts(5, 1, {static_cast<std::uint64_t>(6 - a)});
    CHECK(l.coeffs == big({1, -a, 5}));
    CHECK(l.satisfies_functional_equation());
  }
}

TEST_CASE("elliptic curves over GF(2): L, p-rank and reconstruction") {
  // Supersingular y^2 z + y z^2 = x^3 and ordinary y^2 z + x y z = x^3 + z^3.
  const auto ss = plane_counts("x1^2*x2 + x1*x2^2 + x0^3", 8);
  const auto ord = plane_counts("x1^2*x2 + x0*x1*x2 + x0^3 + x2^3", 8);
  const auto lss = l_polynomial_from_counts(2, 1, ss);
  const auto lord = l_polynomial_from_counts(2, 1, ord);
  CHECK(lss.coeffs == big({1, 0, 2}));
  CHECK(p_rank_from_l(lss, 2) == 0);
  CHECK(p_rank_from_l(lord, 2) == 1);
  CHECK(lord.coeffs[1] % 2 != 0);
  CHECK(weil_check(lss).pass);
  CHECK(weil_check(lord).pass);
}

TEST_CASE("Klein quartic: genus 3 from six counts, the rest as cross-checks") {
  const auto n = plane_counts("x0^3*x1 + x1^3*x2 + x2^3*x0", 7);
  const auto l = l_polynomial_from_counts(2, 3, n);
  CHECK(l.degree() == 6);
  CHECK(l.satisfies_functional_equation());
  const auto back = counts_from_l(l, 7);
  for (std::size_t m = 0; m < 7; ++m) CHECK(back[m] == n[m]);
  CHECK(weil_check(l).pass);

  auto bad = n;
  bad[6] += 2;
  try {
    l_polynomial_from_counts(2, 3, bad);
    FAIL("inconsistent extra count accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "count_mismatch");
  }
}

TEST_CASE("input errors") {
  try {
    l_polynomial_from_counts(2, 1, {100});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "weil_violation");
  }
  try {
    l_polynomial_from_counts(2, 3, {3, 5});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "too_few_counts");
  }
  // s_1 = 1, s_2 = 0 gives a_2 = 1/2.
  try {
    l_polynomial_from_counts(2, 2, {2, 5});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "non_integral");
  }
}

TEST_CASE("Prym division") {
  const LPolynomial e{2, 1, big({1, 1, 2})};
  const LPolynomial sq{2, 2, big({1, 2, 5, 4, 4})};
  CHECK(prym_l_polynomial(e, sq) == e);
  const LPolynomial off{2, 2, big({1, 2, 5, 4, 6})};
  try {
    prym_l_polynomial(e, off);
    FAIL("inexact division accepted");
  } catch (const Error& err) {
    CHECK(err.code() == "non_exact_division");
  }
  const LPolynomial other{3, 1, big({1, 1, 3})};
  CHECK_THROWS_AS(prym_l_polynomial(other, sq), Error);
}

TEST_CASE("example curve and cover: genera 6 and 11, Prym of dimension 5") {
  const auto fr = example_frame();
  const auto table = count_curve_and_cover(fr, 12);
  std::vector<std::uint64_t> n, nt;
  for (const auto& r : table.rows) {
    n.push_back(r.n);
    nt.push_back(r.ntilde);
  }
  const auto lc = l_polynomial_from_counts(2, 6, n);
  const auto lct = l_polynomial_from_counts(2, 11, nt);
  CHECK(lc.degree() == 12);
  CHECK(lct.degree() == 22);
  CHECK(lc.satisfies_functional_equation());
  CHECK(lct.satisfies_functional_equation());
  const auto lp = prym_l_polynomial(lc, lct);
  CHECK(lp.degree() == 10);
  CHECK(lp.satisfies_functional_equation());

  // A disconnected cover would have L_Ctilde = L_C^2 and give L_C back.
  LPolynomial sq{2, 12, std::vector<BigInt>(25, 0)};
  for (std::size_t i = 0; i < 13; ++i)
    for (std::size_t j = 0; j < 13; ++j) sq.coeffs[i + j] += lc.coeffs[i] * lc.coeffs[j];
  CHECK(prym_l_polynomial(lc, sq) == lc);
  CHECK_FALSE(sq == lct);

  for (const auto* l : {&lc, &lct, &lp}) {
    const auto w = weil_check(*l);
    CHECK(w.pass);
    CHECK(w.max_deviation < 1e-6L);
  }
  CHECK(p_rank_from_l(lc, 2) <= 6);
  CHECK(p_rank_from_l(lct, 2) >= p_rank_from_l(lc, 2));
}

TEST_CASE("count_threefold_points against brute force") {
  auto f2 = Field::make(2, 1);
  const auto fermat = CubicThreefold::parse(kFermatCubic, f2);
  const auto example = CubicThreefold::parse(kExampleCubic, f2);
  for (unsigned m : {1u, 2u}) {
    CHECK(count_threefold_points(fermat, m) == brute_threefold(fermat, m));
    CHECK(count_threefold_points(example, m) == brute_threefold(example, m));
    CHECK(count_threefold_points(example, m, {}, kernels::Exec::Serial) == brute_threefold(example, m));
    CHECK(count_threefold_points(example, m) <= kernels::projective_point_count(1u << m, 5));
  }
  ThreefoldBudget tight{1000};
  try {
    count_threefold_points(example, 3, tight);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("point-count identity on the example and random good frames") {
  auto f2 = Field::make(2, 1);
  const auto x = CubicThreefold::parse(kExampleCubic, f2);
  for (const auto& row : verify_ij_identity(x, example_frame(), 4)) {
    CHECK(row.pass);
    CHECK(row.lhs == row.rhs);
  }
  for (const auto& [y, fr] : good_frames(f2, 5, 21)) {
    for (const auto& row : verify_ij_identity(y, fr, 3)) {
      CHECK(row.pass);
      if (row.n == row.ntilde) {
        const std::int64_t qm = std::int64_t{1} << row.m;
        CHECK(row.lhs == qm * qm * qm + qm * qm + qm + 1);
      }
    }
  }
  auto f3 = Field::make(3, 1);
  for (const auto& [y, fr] : good_frames(f3, 3, 22))
    for (const auto& row : verify_ij_identity(y, fr, 2)) CHECK(row.pass);
}

TEST_CASE("a corrupted frame breaks the identity") {
  auto f2 = Field::make(2, 1);
  const auto x = CubicThreefold::parse(kExampleCubic, f2);
  const auto good = example_frame();
  // First etale mutation of Q1 among all quadrics over GF(2).
  const auto& y = default_variables(3);
  const std::vector<Form> quad{parse_form("x0^2", f2, y), parse_form("x0*x1", f2, y), parse_form("x0*x2", f2, y),
                               parse_form("x1^2", f2, y), parse_form("x1*x2", f2, y), parse_form("x2^2", f2, y)};
  std::optional<GoodLineFrame> bad;
  for (unsigned mask = 1; mask < 64 && !bad; ++mask) {
    auto fr = good;
    fr.q1 = Form(f2, 3);
    for (unsigned i = 0; i < 6; ++i)
      if (mask >> i & 1) fr.q1 = fr.q1 + quad[i];
    if (!(fr.q1 == good.q1) && is_etale(fr)) bad = fr;
  }
  REQUIRE(bad.has_value());
  const auto& fr = *bad;
  bool any_fail = false;
  for (const auto& row : verify_ij_identity(x, fr, 4)) any_fail = any_fail || !row.pass;
  CHECK(any_fail);
}
