#ifndef LORCHECK_HOMPOLY_HPP
#define LORCHECK_HOMPOLY_HPP

#include <map>
#include <set>
#include <vector>

#include "lorcheck/types.hpp"

namespace lorcheck {

// Homogeneous polynomial with exact rational coefficients, stored sparsely.
// Invariants: every stored exponent vector has length nvars and total degree
// equal to degree; no zero coefficients are stored. The zero polynomial is
// representable at any (nvars, degree) with an empty term map.
struct HomPoly {
  int nvars = 0;
  int degree = 0;
  std::map<MultiIndex, Rat> terms;

  HomPoly() = default;
  HomPoly(int n, int d) : nvars(n), degree(d) {}

  bool is_zero() const { return terms.empty(); }
  bool operator==(const HomPoly& o) const {
    return nvars == o.nvars && degree == o.degree && terms == o.terms;
  }
};

// Validates lengths/degrees and drops zero coefficients.
HomPoly make_hompoly(int nvars, int degree,
                     const std::vector<std::pair<MultiIndex, Rat>>& terms);

bool has_nonnegative_coefficients(const HomPoly& f);
std::set<MultiIndex> support(const HomPoly& f);

Rat evaluate(const HomPoly& f, const RatVector& x);

// Iterated formal partial derivative \partial^alpha f.
HomPoly partial(const HomPoly& f, const MultiIndex& alpha);
HomPoly partial1(const HomPoly& f, int var);

RatVector gradient_at(const HomPoly& f, const RatVector& x);
RatMatrix hessian_at(const HomPoly& f, const RatVector& x);

HomPoly add(const HomPoly& f, const HomPoly& g);
HomPoly scale(const HomPoly& f, const Rat& c);
HomPoly mul(const HomPoly& f, const HomPoly& g);

// f(L*y) for an nvars x m matrix L; result lives in m variables.
HomPoly substitute_linear(const HomPoly& f, const RatMatrix& L);

// Value of the symmetric multilinear polarization form F_f at d vectors,
// F_f(v_1,...,v_d) = (1/d!) * sum over S of (-1)^{d-|S|} f(sum_{i in S} v_i),
// normalized so that F_f(v,...,v) = f(v).
Rat multilinear_form(const HomPoly& f, const std::vector<RatVector>& vs);

// All partials \partial^alpha f for |alpha| <= f.degree, keyed by alpha.
// Built once and shared by the inequality sweeps.
class DerivativeTable {
 public:
  explicit DerivativeTable(const HomPoly& f);
  const HomPoly& at(const MultiIndex& alpha) const;

 private:
  std::map<MultiIndex, HomPoly> table_;
};

}  // namespace lorcheck

#endif
