#include "doctest.h"

#include "goodline/error.hpp"
#include "goodline/poly.hpp"
#include "test_support.hpp"

using namespace goodline;
using namespace goodline::testing;

namespace {

const auto kX = default_variables(5);

Form parse5(const FieldPtr& f, const char* s) { return parse_form(s, f, kX); }

}  // namespace

TEST_CASE("parse_form accepts the example cubics") {
  auto f2 = Field::make(2, 1);
  const Form example = parse_homogeneous_form(kExampleCubic, f2, kX);
  CHECK(example.degree() == 3);
  CHECK(example.is_homogeneous());
  CHECK(example.terms().size() == 9);

  const Form fermat = parse_homogeneous_form(kFermatCubic, f2, kX);
  CHECK(fermat.terms().size() == 5);

  try {
    parse_homogeneous_form("x0^3 + x1", f2, kX);
    FAIL("inhomogeneous form accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "not_homogeneous");
  }
  CHECK(parse_form("x0^3 + x1", f2, kX).degree() == 3);
}

TEST_CASE("parse_form errors carry codes and positions") {
  auto f2 = Field::make(2, 1);
  try {
    parse_form("x0 + * x1", f2, kX);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "syntax_error");
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
  try {
    parse_form("x0 + z7", f2, kX);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "unknown_variable");
  }
  try {
    parse_form("t*x0", f2, kX);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "coefficient_not_in_field");
  }
  auto f4 = Field::make(2, 2);
  const Form g = parse_form("(1+t)*x0^2 - t*x1*x2", f4, kX);
  CHECK(g.coefficient(Exponents{2}) == f4->add(f4->gen(), 1));
}

TEST_CASE("evaluate_form") {
  auto f2 = Field::make(2, 1);
  const Form fermat = parse5(f2, kFermatCubic);
  const std::vector<Field::Value> p1{1, 1, 0, 0, 0}, p2{1, 0, 0, 0, 0}, on_line{0, 0, 0, 1, 0};
  CHECK(fermat.evaluate(p1) == 0);
  CHECK(fermat.evaluate(p2) == 1);
  CHECK(parse5(f2, kExampleCubic).evaluate(on_line) == 0);
  const std::vector<Field::Value> short_point{1, 0};
  CHECK_THROWS_AS(fermat.evaluate(short_point), Error);

  // Coordinates in GF(4) with the form over GF(2).
  auto f4 = Field::make(2, 2);
  auto emb = Embedding::find(f2, f4);
  const std::vector<Field::Value> ext{1, f4->gen(), 0, 0, 0};
  CHECK(fermat.evaluate(emb, ext) == 0);  // 1 + g^3 = 0
}

TEST_CASE("jacobian_ideal and partial derivatives") {
  auto f2 = Field::make(2, 1);
  const Form fermat = parse5(f2, kFermatCubic);
  const Ideal jf = jacobian_ideal(fermat);
  REQUIRE(jf.gens.size() == 6);
  for (std::size_t i = 0; i < 5; ++i) {
    Exponents e{};
    e[i] = 2;
    CHECK(jf.gens[i + 1] == Form::monomial(f2, 5, e, 1));
  }

  auto f3 = Field::make(3, 1);
  CHECK(parse_form("x0^3", f3, {"x0"}).partial(0).is_zero());

  const Form example = parse5(f2, kExampleCubic);
  CHECK(example.partial(3) == parse5(f2, "x4*x1 + x0^2 + x1^2"));
  CHECK(example.partial(0) == parse5(f2, "x3^2 + x2^2"));
  CHECK(example.partial(1) == parse5(f2, "x3*x4"));
}

TEST_CASE("substitute_linear") {
  auto f2 = Field::make(2, 1);
  const Form fermat = parse5(f2, kFermatCubic);
  CHECK(fermat.substitute_linear(Matrix::identity(5)) == fermat);
  Matrix swap = Matrix::identity(5);
  swap(0, 0) = swap(2, 2) = 0;
  swap(0, 2) = swap(2, 0) = 1;
  CHECK(fermat.substitute_linear(swap) == fermat);
  CHECK_THROWS_AS(fermat.substitute_linear(Matrix(5, 5)), Error);
}

TEST_CASE("substitution properties") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2ull, 1u}, {2ull, 2u}, {3ull, 1u}}) {
    auto F = Field::make(p, k);
    for (int trial = 0; trial < 20; ++trial) {
      const Form f = random_homogeneous(rng, F, 5, 3);
      const Matrix m = random_invertible(rng, *F, 5);
      const Matrix mi = *inverse(*F, m);
      const Form g = f.substitute_linear(m);
      CHECK(g.substitute_linear(mi) == f);
      if (!f.is_zero()) CHECK(g.degree() == 3);
      CHECK(g.is_homogeneous());
      std::uniform_int_distribution<Field::Value> entry(0, F->cardinality() - 1);
      std::vector<Field::Value> v(5);
      for (auto& x : v) x = entry(rng);
      CHECK(g.evaluate(v) == f.evaluate(apply(*F, m, v)));
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{2ull, 1u}, {2ull, 3u}, {5ull, 1u}, {3ull, 2u}}) {
    auto F = Field::make(p, k);
    for (int trial = 0; trial < 25; ++trial) {
      const Form f = random_homogeneous(rng, F, 4, 1 + trial % 4);
      const std::string s = f.str(default_variables(4));
      CHECK(parse_form(s, F, default_variables(4)) == f);
    }
  }
}

TEST_CASE("groebner_basis examples") {
  auto f2 = Field::make(2, 1);
  const std::vector<std::string> xy{"x", "y"};
  {
    const Ideal I(f2, 5, {parse5(f2, "x0"), parse5(f2, "x1")});
    const Ideal gb = groebner_basis(I);
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[0] == parse5(f2, "x0"));
    CHECK(gb.gens[1] == parse5(f2, "x1"));
  }
  {
    // x^2 - x(x+y) = xy, xy - y(x+y) = y^2.
    const Ideal I(f2, 2, {parse_form("x^2", f2, xy), parse_form("x+y", f2, xy)});
    const Ideal gb = groebner_basis(I);
    REQUIRE(gb.gens.size() == 2);
    CHECK(gb.gens[1] == parse_form("x+y", f2, xy));
    CHECK(gb.gens[0] == parse_form("y^2", f2, xy));
  }
  {
    std::vector<Form> squares;
    for (std::size_t i = 0; i < 5; ++i) squares.push_back(parse5(f2, ("x" + std::to_string(i) + "^2").c_str()).dehomogenize(0));
    const Ideal gb = groebner_basis(Ideal(f2, 4, squares));
    CHECK(contains_one(gb));
    CHECK(gb.gens.size() == 1);
  }
}

TEST_CASE("groebner_basis respects the resource caps") {
  auto f2 = Field::make(2, 1);
  const std::vector<std::string> xyz{"x", "y", "z"};
  const Ideal I(f2, 3, {parse_form("x^3*y + z^4 + y", f2, xyz), parse_form("y^3*z + x^2 + x*z", f2, xyz),
                        parse_form("z^3*x + y^2*x + 1", f2, xyz)});
  GroebnerLimits tight;
  tight.max_degree = 4;
  try {
    groebner_basis(I, tight);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
  GroebnerLimits few;
  few.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(I, few), Error);
}

TEST_CASE("every generator reduces to zero against its basis") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : {std::pair{2ull, 1u}, {2ull, 2u}, {3ull, 1u}}) {
    auto F = Field::make(p, k);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Form> gens;
      for (int g = 0; g < 3; ++g) {
        Form h = random_homogeneous(rng, F, 4, 2 + g % 2, 0.3).dehomogenize(0);
        if (!h.is_zero()) gens.push_back(h);
      }
      if (gens.empty()) continue;
      for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
        const Ideal I(F, 3, gens, order);
        const Ideal gb = groebner_basis(I);
        for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
        CHECK(groebner_basis(gb).gens.size() == gb.gens.size());
      }
    }
  }
}

TEST_CASE("projective_is_empty examples") {
  auto f2 = Field::make(2, 1);
  std::vector<Form> vars;
  for (std::size_t i = 0; i < 5; ++i) vars.push_back(Form::variable(f2, 5, i));
  CHECK(projective_is_empty(Ideal(f2, 5, vars)));
  CHECK_FALSE(projective_is_empty(Ideal(f2, 5, {parse5(f2, "x0*x1")})));
  CHECK(projective_is_empty(jacobian_ideal(parse5(f2, kExampleCubic))));
  CHECK(projective_is_empty(jacobian_ideal(parse5(f2, kFermatCubic))));
  CHECK_FALSE(projective_is_empty(jacobian_ideal(parse5(f2, "x0^3"))));
  CHECK_THROWS_AS(projective_is_empty(Ideal(f2, 5, {parse5(f2, "x0^2+x1")})), Error);
}

TEST_CASE("projective_is_empty is sound against exhaustive search") {
  std::mt19937_64 rng(5);
  auto f2 = Field::make(2, 1);
  std::vector<FieldPtr> ext{Field::make(2, 1), Field::make(2, 2), Field::make(2, 3)};
  int empty_seen = 0, nonempty_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Form> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_homogeneous(rng, f2, 3, 2, 0.5));
    const Ideal I(f2, 3, gens);
    const bool empty = projective_is_empty(I);
    (empty ? empty_seen : nonempty_seen)++;
    for (const auto& E : ext) {
      const auto emb = Embedding::find(f2, E);
      bool common_zero = false;
      for_each_projective_point(*E, 3, [&](const std::vector<Field::Value>& v) {
        bool all = true;
        for (const auto& g : gens) all = all && g.evaluate(emb, v) == 0;
        common_zero = common_zero || all;
      });
      if (empty) CHECK_FALSE(common_zero);
      if (common_zero) CHECK_FALSE(empty);
    }
  }
  CHECK(empty_seen > 0);
  CHECK(nonempty_seen > 0);

  // Fixtures with a known rational point.
  const std::vector<std::string> v3{"x", "y", "z"};
  CHECK_FALSE(projective_is_empty(Ideal(f2, 3, {parse_form("x^2+y*z", f2, v3), parse_form("x*y+z^2+x*z", f2, v3)})));
  CHECK_FALSE(projective_is_empty(Ideal(f2, 3, {parse_form("x*y", f2, v3), parse_form("y*z", f2, v3), parse_form("x*z", f2, v3)})));
}
