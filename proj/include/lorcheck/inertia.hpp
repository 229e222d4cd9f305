#ifndef LORCHECK_INERTIA_HPP
#define LORCHECK_INERTIA_HPP

#include "lorcheck/types.hpp"

namespace lorcheck {

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact inertia of a symmetric rational matrix by congruence diagonalization
// (Sylvester's law of inertia). Handles zero diagonals via symmetric pivot
// swaps and, failing that, a row/column addition that creates a usable pivot.
Inertia inertia(const RatMatrix& a);

// Exact rank by Gaussian elimination; also reports the pivot row and column
// index sets (used for affine charts and independent-subset selection).
struct RankInfo {
  int rank = 0;
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};
RankInfo row_echelon_rank(RatMatrix m);

bool is_positive_definite(const RatMatrix& a);

}  // namespace lorcheck

#endif
