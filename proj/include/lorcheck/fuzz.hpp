#ifndef LORCHECK_FUZZ_HPP
#define LORCHECK_FUZZ_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lorcheck/hompoly.hpp"
#include "lorcheck/mixed_discriminant.hpp"
#include "lorcheck/numerical_dim.hpp"
#include "lorcheck/polytope.hpp"
#include "lorcheck/schur_valuation.hpp"

namespace lorcheck {
namespace fuzz {

// Deterministic stream: mt19937_64 (bit-exact across standard libraries) with
// hand-rolled rejection sampling instead of std distributions, whose outputs
// are implementation-defined. Identical seed => identical corpus bytes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [lo, hi], inclusive, without modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  bool chance(int num, int den);  // true with probability num/den

  // A derived independent stream for trial isolation.
  Rng fork(std::uint64_t stream) const;

  Rat rational(long max_abs_num, long max_den);      // any sign
  Rat nonneg_rational(long max_num, long max_den);   // >= 0

 private:
  std::mt19937_64 gen_;
};

// Product of `degree` random nonzero linear forms with nonnegative integer
// coefficients; Lorentzian by closure of the class under products.
HomPoly linear_form_product(Rng& rng, int nvars, int degree);

// Point in the closed nonnegative orthant with small numerators/denominators.
RatVector nonneg_point(Rng& rng, int nvars, long max_num, long max_den);
// Point with entries of either sign.
RatVector any_point(Rng& rng, int nvars, long max_abs, long max_den);

// Random V-polytope: vertex coordinates with value range [-coord_range,
// coord_range] and denominator at most max_den.
Polytope polytope(Rng& rng, int dim, int max_verts, long coord_range,
                  long max_den);

// Random lattice polytope with at least one edge (never a point); used for
// polymatroid ground sets.
Polytope nonpoint_lattice_polytope(Rng& rng, int dim, int max_verts,
                                   long coord_range);

// B^T B + I for an integer matrix B: symmetric positive definite.
RatMatrix pd_matrix(Rng& rng, int n, long range);
// Symmetric with integer entries of either sign.
RatMatrix sym_matrix(Rng& rng, int n, long range);

// Weakly decreasing parts summing exactly to weight, each <= width.
Partition partition(Rng& rng, int weight, int width);

// Spec with partitions of total weight n-2 and small random bodies.
SchurValuationSpec schur_spec(Rng& rng, int n);

GroundSet ground_set(Rng& rng, int max_bodies, int max_dim);

}  // namespace fuzz
}  // namespace lorcheck

#endif
