#ifndef LORCHECK_MIXED_DISCRIMINANT_HPP
#define LORCHECK_MIXED_DISCRIMINANT_HPP

#include <vector>

#include "lorcheck/types.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

// D(M_1,...,M_n) = (1/n!) sum_{0 != S <= [n]} (-1)^{n-|S|} det(sum_S M_i),
// normalized so D(M,...,M) = det M. Requires n symmetric n x n matrices.
Rat mixed_discriminant(const std::vector<RatMatrix>& mats);

// Gram matrix of q(M,N) = D(M, N, A_1,...,A_{m-2}, W[n-m]) on the
// n(n+1)/2-dimensional space of symmetric matrices. Basis order: E_11,...,E_nn
// then E_ij + E_ji for i < j in lexicographic (i,j) order. A_1..A_{m-2} and W
// must be positive definite; 2 <= m <= n.
RatMatrix md_hodge_form(const std::vector<RatMatrix>& hypothesis,
                        const RatMatrix& W, int m);

// D(A,B,rest)^2 >= D(A,A,rest) D(B,B,rest) with rest = A_1..A_{m-2}, W[n-m];
// requires A and the hypothesis matrices positive definite, B symmetric.
Verdict md_af_check(const RatMatrix& A, const RatMatrix& B,
                    const std::vector<RatMatrix>& hypothesis,
                    const RatMatrix& W, int m);

// The basis used by md_hodge_form, as explicit matrices.
std::vector<RatMatrix> sym_matrix_basis(int n);

}  // namespace lorcheck

#endif
