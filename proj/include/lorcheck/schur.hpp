#ifndef LORCHECK_SCHUR_HPP
#define LORCHECK_SCHUR_HPP

#include <vector>

#include "lorcheck/hompoly.hpp"

namespace lorcheck {

// Weakly decreasing nonnegative parts; trailing zeros are stripped on
// construction so the part count is the number of determinant rows.
struct Partition {
  std::vector<int> parts;
};

Partition make_partition(std::vector<int> parts);
int partition_weight(const Partition& lambda);
Partition conjugate(const Partition& lambda);

// sigma_k(x_1..x_e); the zero polynomial (of degree max(k,0)) when k is
// outside [0, e], and the constant 1 when k = 0.
HomPoly elementary_symmetric(int k, int e);

// det[sigma_{lambda_i - i + j}]_{i,j=1..N} in e variables, a homogeneous
// polynomial of degree |lambda| with nonnegative coefficients. Requires
// lambda_1 <= e.
HomPoly schur(const Partition& lambda, int e);

// Coefficient of t^i in schur(lambda, e) under the simultaneous shift
// x_j -> x_j + t; i must lie in [0, |lambda|]. Index 0 returns schur itself.
HomPoly derived_schur(const Partition& lambda, int e, int i);

}  // namespace lorcheck

#endif
