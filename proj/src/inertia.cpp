#include "lorcheck/inertia.hpp"

#include <Eigen/Dense>

namespace lorcheck {

Inertia inertia(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("inertia of non-square matrix");
  const int n = static_cast<int>(input.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (input(i, j) != input(j, i)) throw InputError("inertia of non-symmetric matrix");

  RatMatrix a = input;
  Inertia out;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int dswap = -1;
      for (int j = k + 1; j < n; ++j)
        if (a(j, j) != 0) {
          dswap = j;
          break;
        }
      if (dswap >= 0) {
        a.row(k).swap(a.row(dswap));
        a.col(k).swap(a.col(dswap));
      } else {
        int joff = -1;
        for (int j = k + 1; j < n; ++j)
          if (a(j, k) != 0) {
            joff = j;
            break;
          }
        if (joff < 0) {
          // Trailing row and column k vanish entirely.
          out.zero += 1;
          continue;
        }
        // All trailing diagonal entries are zero, so this congruence
        // (add row/col joff into k) makes a(k,k) = 2 a(k,joff) != 0.
        a.row(k) += a.row(joff);
        a.col(k) += a.col(joff);
      }
    }
    const Rat pivot = a(k, k);
    if (pivot > 0)
      out.positive += 1;
    else
      out.negative += 1;
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / pivot;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      // One-sided elimination already realizes the congruence on the
      // trailing block; restore literal symmetry for the next passes.
      for (int j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return out;
}

RankInfo row_echelon_rank(RatMatrix m) {
  RankInfo info;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> used(rows, false);
  for (int j = 0; j < cols; ++j) {
    int piv = -1;
    for (int i = 0; i < rows; ++i)
      if (!used[i] && m(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    used[piv] = true;
    info.pivot_rows.push_back(piv);
    info.pivot_cols.push_back(j);
    info.rank += 1;
    for (int i = 0; i < rows; ++i) {
      if (i == piv || m(i, j) == 0) continue;
      Rat f = m(i, j) / m(piv, j);
      for (int t = j; t < cols; ++t) m(i, t) -= f * m(piv, t);
    }
  }
  return info;
}

bool is_positive_definite(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("definiteness of non-square matrix");
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw InputError("definiteness of non-symmetric matrix");
  for (int k = 1; k <= n; ++k) {
    RatMatrix lead = a.topLeftCorner(k, k);
    if (lead.determinant() <= 0) return false;
  }
  return true;
}

}  // namespace lorcheck
