#include "goodline/zeta.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

#include "goodline/error.hpp"

namespace goodline {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;  // ascending
using Complex = std::complex<long double>;

BigInt big_pow(std::uint64_t q, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly poly_rem(RPoly a, const RPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly poly_div(RPoly a, const RPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RPoly out(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    out[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return out;
}

RPoly poly_gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Aberth iteration for a monic polynomial (ascending coefficients).
std::vector<Complex> aberth(const std::vector<long double>& c, long double radius) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(radius, static_cast<long double>(2 * M_PI) * (static_cast<long double>(i) + 0.25L) /
                                  static_cast<long double>(n));
  const auto eval = [&](Complex x, Complex& d) {
    Complex v = 0;
    d = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      d = d * x + v;
      v = v * x + c[j];
    }
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double move = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex d;
      const Complex v = eval(z[i], d);
      if (v == Complex(0)) continue;
      const Complex ratio = v / d;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const Complex w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      move = std::max(move, std::abs(w));
    }
    if (move < 1e-30L) break;
  }
  for (auto& x : z)
    for (int k = 0; k < 4; ++k) {
      Complex d;
      const Complex v = eval(x, d);
      if (d != Complex(0)) x -= v / d;
    }
  return z;
}

}  // namespace

bool LPolynomial::satisfies_functional_equation() const {
  if (coeffs.size() != 2 * genus + 1 || coeffs[0] != 1) return false;
  for (unsigned i = 0; i <= 2 * genus; ++i) {
    const BigInt lhs = coeffs[2 * genus - i];
    if (i <= genus) {
      if (lhs != big_pow(q, genus - i) * coeffs[i]) return false;
    } else if (coeffs[i] != big_pow(q, i - genus) * lhs) {
      return false;
    }
  }
  return true;
}

LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned genus, const std::vector<std::uint64_t>& counts) {
  if (counts.size() < genus)
    fail_input("too_few_counts", "genus " + std::to_string(genus) + " needs " + std::to_string(genus) + " counts");
  for (std::size_t m = 1; m <= counts.size(); ++m) {
    const BigInt dev = big_pow(q, static_cast<unsigned>(m)) + 1 - BigInt(counts[m - 1]);
    if (dev * dev > BigInt(4) * genus * genus * big_pow(q, static_cast<unsigned>(m)))
      fail_input("weil_violation", "N_" + std::to_string(m) + " = " + std::to_string(counts[m - 1]) +
                                       " is outside the Weil interval for genus " + std::to_string(genus));
  }
  std::vector<BigInt> s(genus + 1);
  for (unsigned m = 1; m <= genus; ++m) s[m] = big_pow(q, m) + 1 - BigInt(counts[m - 1]);
  LPolynomial l{q, genus, std::vector<BigInt>(2 * genus + 1)};
  l.coeffs[0] = 1;
  for (unsigned k = 1; k <= genus; ++k) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += s[i] * l.coeffs[k - i];
    if (acc % k != 0) fail_input("non_integral", "Newton identity gives a non-integral coefficient a_" + std::to_string(k));
    l.coeffs[k] = -acc / k;
  }
  for (unsigned i = 0; i < genus; ++i) l.coeffs[2 * genus - i] = big_pow(q, genus - i) * l.coeffs[i];

  if (counts.size() > genus) {
    const auto back = counts_from_l(l, static_cast<unsigned>(counts.size()));
    for (std::size_t m = genus; m < counts.size(); ++m)
      if (back[m] != counts[m])
        fail_input("count_mismatch", "N_" + std::to_string(m + 1) + " = " + std::to_string(counts[m]) +
                                         " disagrees with the L-polynomial (" + back[m].str() + ")");
  }
  return l;
}

std::vector<BigInt> counts_from_l(const LPolynomial& l, unsigned m_max) {
  std::vector<BigInt> s(m_max + 1), out;
  const auto a = [&](unsigned k) { return k < l.coeffs.size() ? l.coeffs[k] : BigInt(0); };
  for (unsigned k = 1; k <= m_max; ++k) {
    BigInt acc = -BigInt(k) * a(k);
    for (unsigned i = 1; i < k; ++i) acc -= s[i] * a(k - i);
    s[k] = acc;
    out.push_back(big_pow(l.q, k) + 1 - s[k]);
  }
  return out;
}

LPolynomial prym_l_polynomial(const LPolynomial& l_c, const LPolynomial& l_ctilde) {
  if (l_c.q != l_ctilde.q) fail_input("field_mismatch", "L-polynomials over different fields");
  if (l_ctilde.genus < l_c.genus) fail_input("non_exact_division", "the cover has smaller genus than the base");
  const auto& a = l_c.coeffs;
  const auto& c = l_ctilde.coeffs;
  const unsigned d = l_ctilde.degree() - l_c.degree();
  std::vector<BigInt> b(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    BigInt acc = c[k];
    for (unsigned i = 1; i <= k && i < a.size(); ++i) acc -= a[i] * b[k - i];
    b[k] = acc;  // a_0 = 1
  }
  std::vector<BigInt> prod(c.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  if (prod != c) fail_input("non_exact_division", "L_C does not divide L_Ctilde");
  return LPolynomial{l_c.q, l_ctilde.genus - l_c.genus, std::move(b)};
}

unsigned p_rank_from_l(const LPolynomial& l, std::uint64_t p) {
  unsigned deg = 0;
  for (unsigned i = 0; i < l.coeffs.size(); ++i)
    if (l.coeffs[i] % p != 0) deg = i;
  return deg;
}

WeilCheck weil_check(const LPolynomial& l, long double tolerance) {
  WeilCheck out;
  const std::size_t n = l.coeffs.size() - 1;
  if (n == 0) {
    out.pass = true;
    return out;
  }
  // Reciprocal roots are the roots of x^{2g} L(1/x).
  RPoly p(n + 1);
  for (std::size_t i = 0; i <= n; ++i) p[n - i] = Rational(l.coeffs[i]);
  RPoly dp(n);
  for (std::size_t i = 1; i <= n; ++i) dp[i - 1] = p[i] * static_cast<long>(i);
  RPoly sf = poly_div(p, poly_gcd(p, dp));
  const Rational lead = sf.back();
  std::vector<long double> c;
  for (auto& x : sf) c.push_back(static_cast<long double>(x / lead));
  const long double sq = std::sqrt(static_cast<long double>(l.q));
  out.roots = aberth(c, sq);
  for (const auto& z : out.roots) out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(z) - sq));
  out.pass = out.max_deviation < tolerance;
  return out;
}

std::uint64_t count_threefold_points(const CubicThreefold& x, unsigned m, const ThreefoldBudget& budget,
                                     kernels::Exec exec) {
  const auto q = x.field()->cardinality();
  long double qm = 1;
  for (unsigned i = 0; i < m; ++i) qm *= static_cast<long double>(q);
  if (m == 0 || qm * qm * qm * qm > static_cast<long double>(budget.max_points))
    fail_resource("threefold_budget", "P^4 over GF(" + std::to_string(q) + "^" + std::to_string(m) +
                                          ") exceeds the point budget of " + std::to_string(budget.max_points));
  const FieldPtr ext = extension_field(*x.field(), m);
  const Embedding emb = *x.field() == *ext ? Embedding::identity(ext) : Embedding::find(x.field(), ext);
  return kernels::count_projective_zeros(exec, *ext, kernels::CompiledForm::compile(x.form(), emb));
}

std::vector<IdentityRow> verify_ij_identity(const CubicThreefold& x, const GoodLineFrame& fr, unsigned m_max,
                                            const ThreefoldBudget& budget, kernels::Exec exec) {
  if (!(*x.field() == *fr.field)) fail_input("field_mismatch", "the frame and the cubic must share a field");
  CoverBudget cover_budget;
  cover_budget.max_extension_size = std::numeric_limits<std::uint64_t>::max();
  const auto table = count_curve_and_cover(fr, m_max, cover_budget, exec);
  std::vector<IdentityRow> out;
  const auto q = static_cast<std::int64_t>(fr.field->cardinality());
  for (const auto& row : table.rows) {
    std::int64_t qm = 1;
    for (unsigned i = 0; i < row.m; ++i) qm *= q;
    IdentityRow r;
    r.m = row.m;
    r.n = row.n;
    r.ntilde = row.ntilde;
    r.lhs = static_cast<std::int64_t>(count_threefold_points(x, row.m, budget, exec));
    r.rhs = qm * qm * qm + qm * qm + qm + 1 +
            qm * (static_cast<std::int64_t>(row.ntilde) - static_cast<std::int64_t>(row.n));
    r.pass = r.lhs == r.rhs;
    out.push_back(r);
  }
  return out;
}

}  // namespace goodline
