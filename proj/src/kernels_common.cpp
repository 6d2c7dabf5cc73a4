#include <omp.h>

#include "goodline/kernels.hpp"

namespace goodline::kernels {

void set_threads(int n) {
  static const int initial = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : initial);
}

int max_threads() { return omp_get_max_threads(); }

CompiledForm CompiledForm::compile(const Form& form, const Embedding& emb) {
  CompiledForm c;
  c.nvars = form.nvars();
  c.degree = form.degree() < 0 ? 0 : static_cast<unsigned>(form.degree());
  for (const auto& t : form.terms()) {
    c.exps.push_back(t.exp);
    c.coeffs.push_back(emb(t.coeff));
  }
  return c;
}

Field::Value CompiledForm::eval(const Field& f, const Field::Value* point) const {
  Field::Value sum = 0;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    Field::Value v = coeffs[t];
    for (std::size_t i = 0; i < nvars && v != 0; ++i)
      if (exps[t][i]) v = f.mul(v, f.pow(point[i], exps[t][i]));
    sum = f.add(sum, v);
  }
  return sum;
}

std::uint64_t projective_point_count(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

}  // namespace goodline::kernels
