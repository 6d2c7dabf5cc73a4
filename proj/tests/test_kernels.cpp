#include "doctest.h"

#include <random>

#include "goodline/kernels.hpp"
#include "test_support.hpp"

using namespace goodline;
using namespace goodline::kernels;
using namespace goodline::testing;

namespace {

std::uint64_t brute_zeros(const Form& form, const Field& f, const Embedding& emb) {
  std::uint64_t n = 0;
  for_each_projective_point(f, form.nvars(), [&](const std::vector<Field::Value>& v) {
    if (form.evaluate(emb, v) == 0) ++n;
  });
  return n;
}

struct FieldCase {
  std::uint64_t p;
  unsigned k;
};

}  // namespace

TEST_CASE("projective_point_count") {
  CHECK(projective_point_count(2, 3) == 7);
  CHECK(projective_point_count(2, 5) == 31);
  CHECK(projective_point_count(4, 5) == 341);
  CHECK(projective_point_count(3, 1) == 1);
}

TEST_CASE("count_projective_zeros: parallel, reference and brute force agree") {
  std::mt19937_64 rng(11);
  for (const auto [p, k] : {FieldCase{2, 1}, FieldCase{2, 2}, FieldCase{3, 1}, FieldCase{2, 3}, FieldCase{5, 1}}) {
    auto f = Field::make(p, k);
    const auto id = Embedding::identity(f);
    for (std::size_t n : {2u, 3u, 4u}) {
      for (unsigned d : {1u, 2u, 3u, 5u}) {
        const Form form = random_homogeneous(rng, f, n, d, 0.6);
        if (form.is_zero()) continue;
        const auto c = CompiledForm::compile(form, id);
        const auto expect = brute_zeros(form, *f, id);
        CHECK(reference::count_projective_zeros(*f, c) == expect);
        CHECK(omp::count_projective_zeros(*f, c) == expect);
      }
    }
  }
}

TEST_CASE("count_projective_zeros over an extension of the form's field") {
  auto f2 = Field::make(2, 1), f8 = Field::make(2, 3);
  const auto emb = Embedding::find(f2, f8);
  const Form fermat = parse_form(kFermatCubic, f2, default_variables(5));
  const auto c = CompiledForm::compile(fermat, emb);
  const auto expect = brute_zeros(fermat, *f8, emb);
  CHECK(omp::count_projective_zeros(*f8, c) == expect);
  CHECK(reference::count_projective_zeros(*f8, c) == expect);
}

TEST_CASE("tally_cover: parallel matches reference") {
  std::mt19937_64 rng(5);
  for (const auto [p, k] : {FieldCase{2, 1}, FieldCase{2, 2}, FieldCase{2, 3}, FieldCase{3, 1}, FieldCase{3, 2}}) {
    auto f = Field::make(p, k);
    const auto id = Embedding::identity(f);
    for (int trial = 0; trial < 4; ++trial) {
      const Form q0 = random_homogeneous(rng, f, 3, 2), q1 = random_homogeneous(rng, f, 3, 2);
      const Form r = random_homogeneous(rng, f, 3, 3);
      const Form h = random_homogeneous(rng, f, 3, 5, 0.7);
      if (h.is_zero()) continue;
      const auto ch = CompiledForm::compile(h, id), c0 = CompiledForm::compile(q0, id),
                 c1 = CompiledForm::compile(q1, id), cr = CompiledForm::compile(r, id);
      const auto a = omp::tally_cover(*f, ch, c0, c1, cr), b = reference::tally_cover(*f, ch, c0, c1, cr);
      CHECK(a == b);
      CHECK(a.points == a.split + a.nonsplit + a.double_line);
      CHECK(a.points == brute_zeros(h, *f, id));
    }
  }
}

TEST_CASE("scan_lines: parallel matches reference and every line is contained") {
  std::mt19937_64 rng(17);
  auto f2 = Field::make(2, 1), f4 = Field::make(2, 2), f3 = Field::make(3, 1);
  std::vector<std::pair<Form, FieldPtr>> cases{
      {parse_form(kExampleCubic, f2, default_variables(5)), f2},
      {parse_form(kFermatCubic, f2, default_variables(5)), f4},
      {random_homogeneous(rng, f2, 5, 3, 0.3), f2},
      {random_homogeneous(rng, f3, 5, 3, 0.2), f3},
  };
  for (const auto& [form, field] : cases) {
    const auto emb = *form.field() == *field ? Embedding::identity(field) : Embedding::find(form.field(), field);
    const auto c = CompiledForm::compile(form, emb);
    const auto a = omp::scan_lines(*field, c), b = reference::scan_lines(*field, c);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    for (const auto& e : a) {
      // f(s a + t b) at all q+1 points of the line.
      const auto q = field->cardinality();
      for (Field::Value s = 0; s <= q; ++s) {
        std::vector<Field::Value> pt(5);
        for (std::size_t i = 0; i < 5; ++i) pt[i] = s == q ? e[5 + i] : field->add(e[i], field->mul(s, e[5 + i]));
        CHECK(form.evaluate(emb, pt) == 0);
      }
    }
  }
}

TEST_CASE("intersection_dims: parallel matches reference") {
  std::mt19937_64 rng(3);
  auto f = Field::make(3, 1);
  std::uniform_int_distribution<Field::Value> entry(0, 2);
  std::vector<Matrix> subs;
  for (int i = 0; i < 12; ++i) {
    Matrix m(2 + i % 2, 6);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = entry(rng);
    if (rank(*f, m) == m.rows()) subs.push_back(rref(*f, m));
  }
  const auto a = omp::intersection_dims(*f, subs), b = reference::intersection_dims(*f, subs);
  CHECK(a == b);
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(a[i * subs.size() + i] == static_cast<int>(subs[i].rows()) - 1);
}

TEST_CASE("kernel results do not depend on the thread count") {
  auto f4 = Field::make(2, 2);
  const Form fermat = parse_form(kFermatCubic, f4, default_variables(5));
  const auto c = CompiledForm::compile(fermat, Embedding::identity(f4));
  set_threads(1);
  const auto lines1 = omp::scan_lines(*f4, c);
  const auto zeros1 = omp::count_projective_zeros(*f4, c);
  set_threads(4);
  CHECK(omp::scan_lines(*f4, c) == lines1);
  CHECK(omp::count_projective_zeros(*f4, c) == zeros1);
  set_threads(0);
}
