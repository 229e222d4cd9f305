#ifndef LORCHECK_NUMERICAL_DIM_HPP
#define LORCHECK_NUMERICAL_DIM_HPP

#include <map>
#include <vector>

#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/polytope.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

// Ground data for the numerical-dimension rank function: bodies A_1..A_s in
// R^n, a cap 1 <= m <= n, and a full-dimensional reference body W.
struct GroundSet {
  std::vector<Polytope> bodies;
  int m = 0;
  Polytope W = unit_cube(1);
};

int affine_dim(const Polytope& P);

// nd(A) = max{k in [m] : V(A[k], W[n-k]) > 0}, and 0 when the set is empty
// (A a point). W must be full-dimensional.
int nd(const Polytope& A, int m, const Polytope& W);
int nd(const Polytope& A, const GroundSet& ground);

// r(I) = nd(sum_{i in I} A_i) with r(empty) = 0, with subset-sum and rank
// caches keyed by bitmask.
class RankOracle {
 public:
  explicit RankOracle(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.bodies.size()); }

  int rank(const std::vector<int>& subset);
  int rank_mask(unsigned mask);

  // Minkowski sum of the masked bodies ({0} for the empty mask); shared with
  // callers that cross-check nd against the affine-dimension oracle.
  const Polytope& subset_sum(unsigned mask);

 private:
  GroundSet ground_;
  std::map<unsigned, Polytope> sums_;
  std::map<unsigned, int> ranks_;
};

// Exhaustive verification of normalization, monotonicity, submodularity, and
// looplessness over all subsets; ground sets larger than 12 are rejected.
Verdict check_polymatroid(RankOracle& oracle);

// nd(A+B+C) + nd(C) <= nd(A+C) + nd(B+C).
Verdict submodularity_triple_check(const Polytope& A, const Polytope& B,
                                   const Polytope& C, int m, const Polytope& W);

}  // namespace lorcheck

#endif
