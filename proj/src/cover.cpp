#include "goodline/cover.hpp"

#include "goodline/error.hpp"

namespace goodline {

SplitType fiber_splitting(const GoodLineFrame& fr, const FieldPtr& ext, const std::vector<Field::Value>& y) {
  if (y.size() != 3) fail_input("dimension_mismatch", "fiber points need 3 coordinates");
  if (y[0] == 0 && y[1] == 0 && y[2] == 0) fail_input("zero_point", "the zero vector is not a point of P^2");
  const Embedding emb = *fr.field == *ext ? Embedding::identity(ext) : Embedding::find(fr.field, ext);
  if (discriminant_quintic(fr).evaluate(emb, y) != 0)
    fail_input("point_not_on_discriminant", "fiber splitting requires a point of the discriminant curve");
  const ConicCoefficients c{y[0], y[1], y[2], fr.q0.evaluate(emb, y), fr.q1.evaluate(emb, y), fr.r.evaluate(emb, y)};
  return split_type(*ext, c);
}

bool is_etale(const GoodLineFrame& fr, const GroebnerLimits& limits) {
  return projective_is_empty(double_line_ideal(fr), limits);
}

FieldPtr extension_field(const Field& base, unsigned m) {
  if (m == 0) fail_input("bad_degree", "extension degree must be positive");
  return Field::make(base.characteristic(), base.degree() * m);
}

CountTable count_curve_and_cover(const GoodLineFrame& fr, unsigned m_max, const CoverBudget& budget,
                                 kernels::Exec exec) {
  const auto q = fr.field->cardinality();
  std::uint64_t qm = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    if (qm > budget.max_extension_size / q)
      fail_resource("cover_budget", "GF(" + std::to_string(q) + "^" + std::to_string(m) +
                                        ") exceeds the cover count budget of " +
                                        std::to_string(budget.max_extension_size) + " elements");
    qm *= q;
  }
  if (!is_etale(fr)) fail_input("not_etale", "the double cover has double-line fibers");

  const Form h = discriminant_quintic(fr);
  CountTable table{fr.field, {}};
  for (unsigned m = 1; m <= m_max; ++m) {
    const FieldPtr ext = extension_field(*fr.field, m);
    const Embedding emb = *fr.field == *ext ? Embedding::identity(ext) : Embedding::find(fr.field, ext);
    using kernels::CompiledForm;
    const auto t = kernels::tally_cover(exec, *ext, CompiledForm::compile(h, emb), CompiledForm::compile(fr.q0, emb),
                                        CompiledForm::compile(fr.q1, emb), CompiledForm::compile(fr.r, emb));
    if (t.double_line != 0) fail_invariant("double_line_fiber", "double-line fiber found on an etale cover");
    table.rows.push_back({m, t.points, 2 * t.split});
  }
  return table;
}

}  // namespace goodline
