#include <algorithm>
#include <set>

#include "goodline/error.hpp"
#include "goodline/poly.hpp"

namespace goodline {

namespace {

// Terms sorted descending in the working order; monic once in a basis.
using Poly = std::vector<Term>;

class Buchberger {
 public:
  Buchberger(const Field& field, std::size_t nvars, MonomialOrder order, const GroebnerLimits& limits)
      : f_(field), n_(nvars), order_(order), limits_(limits) {}

  bool greater(const Exponents& a, const Exponents& b) const { return monomial_greater(order_, a, b, n_); }

  bool divides(const Exponents& a, const Exponents& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  Exponents lcm(const Exponents& a, const Exponents& b) const {
    Exponents e{};
    for (std::size_t i = 0; i < n_; ++i) e[i] = std::max(a[i], b[i]);
    return e;
  }

  bool coprime(const Exponents& a, const Exponents& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] && b[i]) return false;
    return true;
  }

  Poly sorted(Poly p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return greater(a.exp, b.exp); });
    return p;
  }

  Poly monic(Poly p) const {
    if (p.empty()) return p;
    const auto inv = f_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = f_.mul(t.coeff, inv);
    return p;
  }

  // a - c * x^shift * b, both sorted; leading cancellation is handled by the merge.
  Poly sub_mul(const Poly& a, std::size_t a_from, Field::Value c, const Exponents& shift, const Poly& b,
               std::size_t b_from) const {
    Poly out;
    out.reserve(a.size() + b.size());
    std::size_t i = a_from, j = b_from;
    const auto negc = f_.neg(c);
    auto shifted = [&](const Term& t) {
      Term s;
      for (std::size_t v = 0; v < n_; ++v) s.exp[v] = static_cast<std::uint16_t>(t.exp[v] + shift[v]);
      s.coeff = f_.mul(negc, t.coeff);
      return s;
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
      } else if (i == a.size()) {
        out.push_back(shifted(b[j++]));
      } else {
        Term s = shifted(b[j]);
        if (greater(a[i].exp, s.exp)) {
          out.push_back(a[i++]);
        } else if (greater(s.exp, a[i].exp)) {
          out.push_back(s);
          ++j;
        } else {
          const auto v = f_.add(a[i].coeff, s.coeff);
          if (v != 0) out.push_back({a[i].exp, v});
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  Exponents quotient(const Exponents& a, const Exponents& b) const {
    Exponents e{};
    for (std::size_t i = 0; i < n_; ++i) e[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return e;
  }

  // Full normal form against monic basis polynomials.
  Poly reduce(Poly h, const std::vector<Poly>& basis, std::size_t skip = SIZE_MAX) const {
    Poly rem;
    while (!h.empty()) {
      const Term lt = h.front();
      const Poly* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].empty()) continue;
        if (divides(basis[k].front().exp, lt.exp)) {
          divisor = &basis[k];
          break;
        }
      }
      if (divisor) {
        h = sub_mul(h, 1, lt.coeff, quotient(lt.exp, divisor->front().exp), *divisor, 1);
      } else {
        rem.push_back(lt);
        h.erase(h.begin());
      }
    }
    return rem;
  }

  void check_degree(const Exponents& e) const {
    if (total_degree(e) > limits_.max_degree)
      fail_resource("groebner_degree_cap", "Groebner computation exceeded degree cap " +
                                               std::to_string(limits_.max_degree));
  }

  // Returns the reduced basis, or {1} as soon as a unit appears.
  std::vector<Poly> run(std::vector<Poly> input) {
    std::vector<Poly> basis;
    struct Pair {
      std::size_t i, j;
      Exponents lcm;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    bool unit = false;

    auto add = [&](Poly p) {
      p = monic(std::move(p));
      if (total_degree(p.front().exp) == 0) {
        unit = true;
        return;
      }
      const std::size_t idx = basis.size();
      basis.push_back(std::move(p));
      for (std::size_t i = 0; i < idx; ++i) {
        if (basis[i].empty()) continue;
        pairs.push_back({i, idx, lcm(basis[i].front().exp, basis[idx].front().exp)});
        pending.insert({i, idx});
      }
    };

    for (auto& g : input) {
      Poly r = reduce(sorted(std::move(g)), basis);
      if (!r.empty()) add(std::move(r));
      if (unit) return unit_basis();
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
      auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        const unsigned da = total_degree(a.lcm), db = total_degree(b.lcm);
        if (da != db) return da < db;
        if (a.lcm != b.lcm) return greater(b.lcm, a.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      const Pair pr = *best;
      pairs.erase(best);
      pending.erase({pr.i, pr.j});
      if (++processed > limits_.max_pairs)
        fail_resource("groebner_pair_cap", "Groebner computation exceeded pair cap " +
                                               std::to_string(limits_.max_pairs));
      const Poly& gi = basis[pr.i];
      const Poly& gj = basis[pr.j];
      if (coprime(gi.front().exp, gj.front().exp)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j || basis[k].empty()) continue;
        if (!divides(basis[k].front().exp, pr.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
      }
      if (chain) continue;
      check_degree(pr.lcm);
      // S = (lcm/lm_i) g_i - (lcm/lm_j) g_j with monic g's.
      Poly si;
      si.reserve(gi.size());
      const Exponents qi = quotient(pr.lcm, gi.front().exp);
      for (std::size_t t = 1; t < gi.size(); ++t) {
        Term s = gi[t];
        for (std::size_t v = 0; v < n_; ++v) s.exp[v] = static_cast<std::uint16_t>(s.exp[v] + qi[v]);
        si.push_back(s);
      }
      Poly s = sub_mul(si, 0, f_.one(), quotient(pr.lcm, gj.front().exp), gj, 1);
      Poly h = reduce(std::move(s), basis);
      if (h.empty()) continue;
      check_degree(h.front().exp);
      add(std::move(h));
      if (unit) return unit_basis();
    }

    // Minimize, then inter-reduce.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        if (divides(basis[j].front().exp, basis[i].front().exp) &&
            (basis[j].front().exp != basis[i].front().exp || j < i))
          redundant = true;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Poly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Poly tail(minimal[i].begin() + 1, minimal[i].end());
      Poly r = reduce(std::move(tail), minimal, i);
      r.insert(r.begin(), minimal[i].front());
      reduced[i] = std::move(r);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly& a, const Poly& b) { return greater(a.front().exp, b.front().exp); });
    return reduced;
  }

  std::vector<Poly> unit_basis() const { return {Poly{Term{Exponents{}, f_.one()}}}; }

 private:
  const Field& f_;
  std::size_t n_;
  MonomialOrder order_;
  GroebnerLimits limits_;
};

}  // namespace

Ideal groebner_basis(const Ideal& ideal, const GroebnerLimits& limits) {
  Buchberger bb(*ideal.field, ideal.nvars, ideal.order, limits);
  std::vector<Poly> input;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) input.push_back(g.terms());
  std::vector<Form> out;
  for (auto& p : bb.run(std::move(input))) out.emplace_back(ideal.field, ideal.nvars, std::move(p));
  return Ideal(ideal.field, ideal.nvars, std::move(out), ideal.order);
}

Form normal_form(const Form& f, const Ideal& basis) {
  Buchberger bb(*basis.field, basis.nvars, basis.order, GroebnerLimits{});
  std::vector<Poly> polys;
  for (const auto& g : basis.gens) polys.push_back(bb.monic(bb.sorted(g.terms())));
  return Form(basis.field, basis.nvars, bb.reduce(bb.sorted(f.terms()), polys));
}

bool contains_one(const Ideal& basis) {
  for (const auto& g : basis.gens)
    if (g.degree() == 0) return true;
  return false;
}

bool projective_is_empty(const Ideal& ideal, const GroebnerLimits& limits) {
  for (const auto& g : ideal.gens)
    if (!g.is_homogeneous()) fail_input("not_homogeneous", "projective emptiness needs homogeneous generators");
  for (std::size_t chart = 0; chart < ideal.nvars; ++chart) {
    std::vector<Form> affine;
    for (const auto& g : ideal.gens) {
      Form d = g.dehomogenize(chart);
      if (!d.is_zero()) affine.push_back(std::move(d));
    }
    if (affine.empty()) return false;
    const Ideal gb = groebner_basis(Ideal(ideal.field, ideal.nvars - 1, std::move(affine), ideal.order), limits);
    if (!contains_one(gb)) return false;
  }
  return true;
}

}  // namespace goodline
