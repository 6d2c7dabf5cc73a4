#pragma once

// The double cover of the discriminant curve attached to a good-line frame:
// splitting of the degenerate fibers and point counts of C and its cover.

#include <cstdint>
#include <vector>

#include "goodline/cubic.hpp"
#include "goodline/kernels.hpp"

namespace goodline {

// Splitting of the fiber conic over the point y of P^2(ext); ext must contain
// the frame's field. Throws InputData("point_not_on_discriminant").
SplitType fiber_splitting(const GoodLineFrame& fr, const FieldPtr& ext, const std::vector<Field::Value>& y);

// The cover is étale iff no fiber is a double line.
bool is_etale(const GoodLineFrame& fr, const GroebnerLimits& limits = {});

struct CountRow {
  unsigned m = 0;
  std::uint64_t n = 0;       // #C(GF(q^m))
  std::uint64_t ntilde = 0;  // #C~(GF(q^m)) = 2 * split fibers
  bool operator==(const CountRow&) const = default;
};

struct CountTable {
  FieldPtr field;
  std::vector<CountRow> rows;
};

struct CoverBudget {
  std::uint64_t max_extension_size = std::uint64_t{1} << 12;  // q^m
};

// Field of degree m over the frame's field, with its default modulus.
FieldPtr extension_field(const Field& base, unsigned m);

// Counts for m = 1..m_max. Requires an étale frame.
CountTable count_curve_and_cover(const GoodLineFrame& fr, unsigned m_max, const CoverBudget& budget = {},
                                 kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace goodline
