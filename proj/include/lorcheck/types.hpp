#ifndef LORCHECK_TYPES_HPP
#define LORCHECK_TYPES_HPP

#include <vector>

#include <Eigen/Core>

#include "lorcheck/rational.hpp"

namespace lorcheck {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Exponent vector of a monomial. Lexicographic vector ordering doubles as the
// canonical term order, so std::map<MultiIndex, Rat> iterates deterministically.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

// Component-wise a - b; caller is responsible for nonnegativity when required.
inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex mi_unit(int n, int i) {
  MultiIndex e(n, 0);
  e[i] = 1;
  return e;
}

// All exponent vectors in n variables of total degree exactly d, lex order.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);
// Same with total degree at most d.
std::vector<MultiIndex> multi_indices_up_to_degree(int n, int d);

RatVector rat_vector(std::initializer_list<long> entries);

bool vec_eq(const RatVector& a, const RatVector& b);
bool vec_lex_less(const RatVector& a, const RatVector& b);

}  // namespace lorcheck

#endif
