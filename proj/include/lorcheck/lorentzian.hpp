#ifndef LORCHECK_LORENTZIAN_HPP
#define LORCHECK_LORENTZIAN_HPP

#include <set>

#include "lorcheck/hompoly.hpp"
#include "lorcheck/inertia.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

// Symmetric exchange property: for all a, b in S and i with a_i > b_i there
// is j with a_j < b_j such that a - e_i + e_j and b + e_i - e_j are in S.
Verdict m_convex_support(const std::set<MultiIndex>& s, int nvars);

// Membership of a quadratic with nonnegative coefficients in the Lorentzian
// class: zero, or Hessian with exactly one positive eigenvalue.
Verdict quadratic_in_l2(const HomPoly& q);

// Full Lorentzian test: nonnegative coefficients; for degree >= 2 an M-convex
// support and, for every |alpha| = degree - 2, quadratic_in_l2 of the slice.
Verdict is_lorentzian(const HomPoly& f);

// At a point with f(x) > 0, the two quadratic-class criteria must agree:
//   (a) hessian_at(f, x) has exactly one positive eigenvalue;
//   (b) f(x) H_f(x) - (1 - 1/d) grad f(x) grad f(x)^T is negative semidefinite
// (the Hessian of f^{1/d} up to a positive factor). holds iff (a) == (b).
Verdict quadratic_class_equiv(const HomPoly& f, const RatVector& x);

// c-Rayleigh sweep over all alpha with |alpha| <= d - 2, all i <= j, at the
// given nonnegative points.
Verdict c_rayleigh_check(const HomPoly& f, const Rat& c,
                         const std::vector<RatVector>& points);

// 2(1 - 1/d), the constant guaranteed for Lorentzian polynomials.
Rat rayleigh_constant(int d);

}  // namespace lorcheck

#endif
