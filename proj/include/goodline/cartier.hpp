#pragma once

// Cartier-Manin matrix of a smooth plane quintic in characteristic 2, in the
// basis w_kl = x^{k-1} y^{l-1} dx / F_y (k, l >= 1, k + l <= 4).

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "goodline/linalg.hpp"
#include "goodline/poly.hpp"

namespace goodline {

// Affine chart: variable `fixed` set to 1, the other two become (x, y).
struct QuinticChart {
  std::size_t fixed = 2;
  std::size_t xvar = 0;
  std::size_t yvar = 1;
  bool operator==(const QuinticChart&) const = default;
};

class PlaneQuintic {
 public:
  // Without a chart, tries z = 1 with (x, y) = (x0, x1), then the remaining
  // charts and coordinate orders until F_y is nonzero.
  // Errors: InputData("wrong_characteristic"), ("not_quintic"), ("singular_curve"), ("chart_invalid").
  explicit PlaneQuintic(Form h, std::optional<QuinticChart> chart = std::nullopt, bool require_smooth = true,
                        const GroebnerLimits& limits = {});

  const Form& form() const noexcept { return h_; }
  const QuinticChart& chart() const noexcept { return chart_; }
  // F_{ij}, zero outside 0 <= i, j and i + j <= 5.
  Field::Value coefficient(int i, int j) const;
  // Charts whose F_y is not identically zero, in search order.
  static std::vector<QuinticChart> valid_charts(const Form& h);

 private:
  Form h_;
  QuinticChart chart_;
  std::array<std::array<Field::Value, 6>, 6> f_{};
};

// (k, l) in the order (1,1), (1,2), (1,3), (2,1), (2,2), (3,1).
const std::array<std::pair<int, int>, 6>& cartier_basis();

// M[(i,j),(k,l)] = F_{2i-k, 2j-l}^{1/2}; column (k,l) is the image of w_kl.
Matrix cartier_matrix(const PlaneQuintic& c);

enum class TwistOrder {
  Frobenius,  // M^(s^5) ... M^(s) M
  Opposite,   // M M^(s) ... M^(s^5)
};

struct CartierRanks {
  unsigned p_rank = 0;
  unsigned a_number = 0;
};

CartierRanks cartier_ranks(const Field& f, const Matrix& m, TwistOrder order = TwistOrder::Frobenius);

}  // namespace goodline
