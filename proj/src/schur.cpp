#include "lorcheck/schur.hpp"

#include <algorithm>
#include <numeric>

namespace lorcheck {

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InputError("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

int partition_weight(const Partition& lambda) {
  return std::accumulate(lambda.parts.begin(), lambda.parts.end(), 0);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.parts.empty()) return Partition{out};
  out.resize(lambda.parts[0], 0);
  for (int part : lambda.parts)
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition{std::move(out)};
}

HomPoly elementary_symmetric(int k, int e) {
  if (e < 1) throw InputError("variable count must be positive");
  if (k < 0 || k > e) return HomPoly(e, std::max(k, 0));
  std::vector<std::pair<MultiIndex, Rat>> terms;
  // Subsets of [e] of size k.
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    MultiIndex mono(e, 0);
    for (int p : pick) mono[p] = 1;
    terms.emplace_back(std::move(mono), Rat(1));
    int i = k - 1;
    while (i >= 0 && pick[i] == e - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return make_hompoly(e, k, terms);
}

HomPoly schur(const Partition& lambda, int e) {
  if (e < 1) throw InputError("variable count must be positive");
  const int N = static_cast<int>(lambda.parts.size());
  const int d = partition_weight(lambda);
  if (N > 0 && lambda.parts[0] > e)
    throw InputError("partition width exceeds variable count");
  HomPoly acc(e, d);
  if (N == 0) return elementary_symmetric(0, e);

  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inversions;
    bool skip = false;
    for (int i = 0; i < N && !skip; ++i) {
      int idx = lambda.parts[i] - i + perm[i];
      if (idx < 0 || idx > e) skip = true;
    }
    if (skip) continue;
    HomPoly prod = elementary_symmetric(0, e);
    for (int i = 0; i < N; ++i)
      prod = mul(prod, elementary_symmetric(lambda.parts[i] - i + perm[i], e));
    acc = add(acc, scale(prod, inversions % 2 == 0 ? Rat(1) : Rat(-1)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

HomPoly derived_schur(const Partition& lambda, int e, int i) {
  const int d = partition_weight(lambda);
  if (i < 0 || i > d)
    throw InputError("derived Schur index out of range");
  HomPoly s = schur(lambda, e);
  if (i == 0) return s;
  // Shift x_j -> y_j + y_{e+1} and read off the y_{e+1}^i coefficient.
  RatMatrix L = RatMatrix::Zero(e, e + 1);
  for (int j = 0; j < e; ++j) {
    L(j, j) = 1;
    L(j, e) = 1;
  }
  HomPoly shifted = substitute_linear(s, L);
  std::vector<std::pair<MultiIndex, Rat>> terms;
  for (const auto& [mono, coef] : shifted.terms) {
    if (mono[e] != i) continue;
    MultiIndex head(mono.begin(), mono.end() - 1);
    terms.emplace_back(std::move(head), coef);
  }
  return make_hompoly(e, d - i, terms);
}

}  // namespace lorcheck
