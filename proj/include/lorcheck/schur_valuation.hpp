#ifndef LORCHECK_SCHUR_VALUATION_HPP
#define LORCHECK_SCHUR_VALUATION_HPP

#include <vector>

#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/schur.hpp"

namespace lorcheck {

// One factor s_lambda(E) with E a tuple of bodies; the Schur polynomial is
// taken in exactly bodies.size() variables (arity is strict).
struct SchurTuple {
  Partition lambda;
  std::vector<Polytope> bodies;
};

// Theta(M,N) = V(s_{lambda^1}(E_1), ..., s_{lambda^p}(E_p), M, N): each Schur
// factor is expanded into monomials and plugged into mixed-volume slots by
// multilinear extension. Needs sum_i |lambda^i| = n - 2.
struct SchurValuationSpec {
  std::vector<SchurTuple> tuples;
};

Rat schur_valuation(const SchurValuationSpec& spec, const Polytope& M,
                    const Polytope& N);

// Theta(M,N)^2 >= Theta(M,M) Theta(N,N).
Verdict schur_af_check(const SchurValuationSpec& spec, const Polytope& M,
                       const Polytope& N);

}  // namespace lorcheck

#endif
