#ifndef LORCHECK_INEQUALITIES_HPP
#define LORCHECK_INEQUALITIES_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "lorcheck/hompoly.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

// Constant of the general reverse Khovanskii-Teissier inequality for
// Lorentzian f of degree d and a splitting with |beta| = k, |gamma| = l:
//   f(x) d^{b+g} f(x) <= 2^{kl} (d-k)! (d-l)! / (d! (d-k-l)!) d^b f(x) d^g f(x).
Rat rkt_constant(int d, int k, int l);

// Worst case of rkt_constant over all k, l >= 0 with k + l <= d.
Rat pr_constant(int d);

// Splitting sweep policy. Full enumerates every (beta, gamma) with
// |beta| + |gamma| <= degree; sampled draws uniformly with a fixed seed.
struct Sweep {
  bool full = true;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  static Sweep full_sweep() { return Sweep{}; }
  static Sweep sample(std::int64_t n, std::uint64_t s) { return Sweep{false, n, s}; }
};

std::vector<std::pair<MultiIndex, MultiIndex>> enumerate_splittings(int nvars,
                                                                    int degree);
std::vector<std::pair<MultiIndex, MultiIndex>> sweep_splittings(int nvars,
                                                                int degree,
                                                                const Sweep& sweep);

// Reverse Khovanskii-Teissier with the 2^{kl} constant, swept over the given
// nonnegative points and splittings.
Verdict rkt_check(const HomPoly& f, const std::vector<RatVector>& points,
                  const Sweep& sweep = Sweep::full_sweep());

// The optimal-constant form f(x) d^{b+g} f(x) <= d^b f(x) d^g f(x) (constant 1
// in this normalization; equals the multinomial-constant geometric inequality
// for volume polynomials at |beta| + |gamma| = d). Valid for volume
// polynomials at top order; Lorentzian polynomials may violate it.
Verdict rkt_optimal_check(const HomPoly& f, const std::vector<RatVector>& points,
                          const Sweep& sweep = Sweep::full_sweep());

// Polynomial Pluennecke-Ruzsa: f(x) f(x+y+z) <= c_d f(x+y) f(x+z).
Verdict pr_check(const HomPoly& f,
                 const std::vector<std::array<RatVector, 3>>& triples);

// Higher-order supermodularity: f(x+y+z) + f(x) >= f(x+y) + f(x+z).
// No sign condition on coefficients; the points must be nonnegative.
Verdict supermodularity_check(const HomPoly& f,
                              const std::vector<std::array<RatVector, 3>>& triples);

// Alexandrov-Fenchel form inequality for the polarization F_f:
//   F(v1, v2, w3..wd)^2 >= F(v1, v1, w3..wd) F(v2, v2, w3..wd),
// v1 arbitrary, v2 and w3..wd nonnegative.
Verdict af_form_check(const HomPoly& f,
                      const std::vector<std::vector<RatVector>>& tuples);

}  // namespace lorcheck

#endif
