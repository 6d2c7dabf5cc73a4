#pragma once

// L-polynomials of curves from point counts, the Prym factor, p-ranks, and
// the point-count identity relating a cubic threefold to its conic bundle.

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodline/cover.hpp"
#include "goodline/cubic.hpp"

namespace goodline {

using BigInt = boost::multiprecision::cpp_int;

// L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g}, a_0 = 1.
struct LPolynomial {
  std::uint64_t q = 0;
  unsigned genus = 0;
  std::vector<BigInt> coeffs;

  unsigned degree() const { return 2 * genus; }
  bool satisfies_functional_equation() const;
  bool operator==(const LPolynomial&) const = default;
};

// Uses N_1..N_g; any further counts must agree with the reconstruction.
// Errors: InputData("weil_violation"), InputData("non_integral"),
// InputData("count_mismatch"), InputData("too_few_counts").
LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned genus, const std::vector<std::uint64_t>& counts);

// N_m for m = 1..m_max, from s_m = q^m + 1 - N_m.
std::vector<BigInt> counts_from_l(const LPolynomial& l, unsigned m_max);

// L_Ctilde / L_C. Errors: InputData("non_exact_division"), InputData("field_mismatch").
LPolynomial prym_l_polynomial(const LPolynomial& l_c, const LPolynomial& l_ctilde);

// Degree of L mod p.
unsigned p_rank_from_l(const LPolynomial& l, std::uint64_t p);

struct WeilCheck {
  std::vector<std::complex<long double>> roots;  // distinct reciprocal roots
  long double max_deviation = 0;                 // max | |alpha| - sqrt(q) |
  bool pass = false;
};
WeilCheck weil_check(const LPolynomial& l, long double tolerance = 1e-6L);

struct ThreefoldBudget {
  std::uint64_t max_points = 1000000000;  // |P^4(GF(q^m))|
};

std::uint64_t count_threefold_points(const CubicThreefold& x, unsigned m, const ThreefoldBudget& budget = {},
                                     kernels::Exec exec = kernels::Exec::Parallel);

struct IdentityRow {
  unsigned m = 0;
  std::int64_t lhs = 0;  // #X(GF(q^m))
  std::int64_t rhs = 0;  // q^3m + q^2m + q^m + 1 + q^m (Ntilde_m - N_m)
  std::uint64_t n = 0, ntilde = 0;
  bool pass = false;
};

std::vector<IdentityRow> verify_ij_identity(const CubicThreefold& x, const GoodLineFrame& fr, unsigned m_max,
                                            const ThreefoldBudget& budget = {},
                                            kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace goodline
