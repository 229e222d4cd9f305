#ifndef LORCHECK_MIXED_VOLUME_HPP
#define LORCHECK_MIXED_VOLUME_HPP

#include <map>
#include <vector>

#include "lorcheck/hompoly.hpp"
#include "lorcheck/polytope.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

// A multiset of bodies V(K_1[i_1], ..., K_r[i_r]) with sum of multiplicities
// equal to the ambient dimension.
struct MixedVolumeSpec {
  std::vector<Polytope> bodies;
  std::vector<int> multiplicities;
};

// Memoizing layer over a fixed list of bodies in R^n: Minkowski sums of
// count-vector combinations, their volumes, and mixed volumes computed by
// inclusion-exclusion polarization
//   V(K_1,...,K_n) = (1/n!) sum_{0 != S <= counts} (-1)^{n-|S|} binom(counts,S)
//                    vol(sum_S K_i).
// Sums are built incrementally so overlapping polarization terms share work.
class BodySystem {
 public:
  BodySystem(int ambient_dim, std::vector<Polytope> bodies);

  int ambient_dim() const { return n_; }
  int size() const { return static_cast<int>(bodies_.size()); }
  const Polytope& body(int i) const { return bodies_.at(i); }

  // The polytope sum_i counts[i] * body_i (the origin when all counts are 0).
  const Polytope& sum_body(const std::vector<int>& counts);

  // vol(sum_i counts[i] * body_i).
  const Rat& sum_volume(const std::vector<int>& counts);

  // Mixed volume of the multiset given by counts; sum(counts) must equal n.
  const Rat& mixed(const std::vector<int>& counts);

  // Mixed volume for an explicit length-n index list, e.g. {0,0,1}.
  const Rat& mixed_indices(const std::vector<int>& indices);

 private:
  void check_counts(const std::vector<int>& counts) const;
  int n_;
  std::vector<Polytope> bodies_;
  std::map<std::vector<int>, Polytope> sums_;
  std::map<std::vector<int>, Rat> vols_;
  std::map<std::vector<int>, Rat> mixed_;
};

Rat mixed_volume(const MixedVolumeSpec& spec);

// f(x_1..x_k) = vol(x_1 P_1 + ... + x_k P_k): homogeneous of degree n with
// coefficient of x^mu equal to (n!/prod mu_i!) V(P_1[mu_1],...,P_k[mu_k]).
HomPoly volume_polynomial(const std::vector<Polytope>& bodies);
HomPoly volume_polynomial(BodySystem& sys);

// vol(B) V(B[n-m],A_1..A_m) <= binom(m,k) V(B[n-k],A_1..A_k) V(B[n-m+k],A_{k+1}..A_m)
// for 0 <= k <= m <= n.
Verdict rkt_convex_check(const Polytope& B, const std::vector<Polytope>& A,
                         int k);

// The bipyramid over [-1,1]^2: exact volumes of B and its coordinate
// projections, the failure of the constant-1 product inequality
// vol(B) vol(p12 B) <= vol(p1 B) vol(p2 B), and exact equality at the
// sharpened 2(1-1/3) bound. Rationals serialize as "p/q" strings.
Witness one_rayleigh_counterexample_report();

// The bipyramid conv([-1,1]^2 x {0}, +-e3) itself.
Polytope bipyramid_example();

}  // namespace lorcheck

#endif
