#include "lorcheck/numerical_dim.hpp"

namespace lorcheck {

int affine_dim(const Polytope& P) { return P.affine_dim(); }

int nd(const Polytope& A, int m, const Polytope& W) {
  const int n = A.ambient_dim();
  if (W.ambient_dim() != n)
    throw InputError("reference body dimension mismatch");
  if (W.affine_dim() != n)
    throw InputError("reference body must be full-dimensional");
  if (m < 1 || m > n) throw InputError("cap must satisfy 1 <= m <= n");

  BodySystem sys(n, {A, W});
  int best = 0;
  for (int k = 1; k <= m; ++k) {
    // Positivity of V(A[k], W[n-k]) is monotone downward in k, so the first
    // zero ends the search.
    if (sys.mixed({k, n - k}) > 0)
      best = k;
    else
      break;
  }
  return best;
}

int nd(const Polytope& A, const GroundSet& ground) {
  return nd(A, ground.m, ground.W);
}

RankOracle::RankOracle(GroundSet ground) : ground_(std::move(ground)) {
  const std::size_t s = ground_.bodies.size();
  if (s == 0) throw InputError("ground set needs at least one body");
  const int n = ground_.bodies[0].ambient_dim();
  for (const auto& b : ground_.bodies)
    if (b.ambient_dim() != n)
      throw InputError("ground-set bodies must share the ambient dimension");
  if (ground_.W.ambient_dim() != n)
    throw InputError("reference body dimension mismatch");
  if (ground_.W.affine_dim() != n)
    throw InputError("reference body must be full-dimensional");
  if (ground_.m < 1 || ground_.m > n)
    throw InputError("cap must satisfy 1 <= m <= n");
}

const Polytope& RankOracle::subset_sum(unsigned mask) {
  if (mask >= (1u << size())) throw InputError("subset index out of range");
  auto it = sums_.find(mask);
  if (it != sums_.end()) return it->second;
  Polytope result = Polytope::trusted(
      ground_.bodies[0].ambient_dim(),
      {RatVector::Zero(ground_.bodies[0].ambient_dim())}, 0);
  if (mask != 0) {
    unsigned low = mask & (mask - 1);
    int bit = 0;
    while (!((mask ^ low) & (1u << bit))) ++bit;
    if (low == 0)
      result = ground_.bodies[bit];
    else
      result = minkowski_sum(subset_sum(low), ground_.bodies[bit]);
  }
  return sums_.emplace(mask, std::move(result)).first->second;
}

int RankOracle::rank_mask(unsigned mask) {
  if (mask >= (1u << size())) throw InputError("subset index out of range");
  auto it = ranks_.find(mask);
  if (it != ranks_.end()) return it->second;
  int r = mask == 0 ? 0 : nd(subset_sum(mask), ground_.m, ground_.W);
  ranks_.emplace(mask, r);
  return r;
}

int RankOracle::rank(const std::vector<int>& subset) {
  unsigned mask = 0;
  for (int i : subset) {
    if (i < 0 || i >= size()) throw InputError("ground-set index out of range");
    mask |= 1u << i;
  }
  return rank_mask(mask);
}

Verdict check_polymatroid(RankOracle& oracle) {
  const int s = oracle.size();
  if (s > 12) throw InputError("ground set exceeds the exhaustive budget (12)");
  const unsigned full = 1u << s;

  std::vector<int> r(full);
  for (unsigned mask = 0; mask < full; ++mask) r[mask] = oracle.rank_mask(mask);

  auto subset_list = [s](unsigned mask) {
    std::vector<int> out;
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) out.push_back(i);
    return out;
  };

  if (r[0] != 0) {
    Witness w;
    w["kind"] = "normalization-failure";
    w["rank_empty"] = r[0];
    return Verdict::fail(w);
  }
  for (int i = 0; i < s; ++i)
    if (r[1u << i] < 1) {
      Witness w;
      w["kind"] = "loop";
      w["index"] = i;
      w["rank"] = r[1u << i];
      return Verdict::fail(w);
    }
  for (unsigned mask = 0; mask < full; ++mask)
    for (int i = 0; i < s; ++i) {
      if (mask & (1u << i)) continue;
      if (r[mask | (1u << i)] < r[mask]) {
        Witness w;
        w["kind"] = "monotonicity-failure";
        w["I"] = subset_list(mask);
        w["i"] = i;
        return Verdict::fail(w);
      }
    }
  for (unsigned a = 0; a < full; ++a)
    for (unsigned b = a; b < full; ++b)
      if (r[a | b] + r[a & b] > r[a] + r[b]) {
        Witness w;
        w["kind"] = "submodularity-failure";
        w["I"] = subset_list(a);
        w["J"] = subset_list(b);
        w["r_union"] = r[a | b];
        w["r_intersection"] = r[a & b];
        w["r_I"] = r[a];
        w["r_J"] = r[b];
        return Verdict::fail(w);
      }
  return Verdict::ok();
}

Verdict submodularity_triple_check(const Polytope& A, const Polytope& B,
                                   const Polytope& C, int m, const Polytope& W) {
  const int n = A.ambient_dim();
  if (B.ambient_dim() != n || C.ambient_dim() != n)
    throw InputError("bodies must share the ambient dimension");
  Polytope ac = minkowski_sum(A, C);
  Polytope bc = minkowski_sum(B, C);
  Polytope abc = minkowski_sum(ac, B);
  int lhs = nd(abc, m, W) + nd(C, m, W);
  int rhs = nd(ac, m, W) + nd(bc, m, W);
  if (lhs <= rhs) return Verdict::ok_with_margin(Rat(rhs - lhs));
  Witness w;
  w["kind"] = "nd-submodularity-failure";
  w["nd_ABC"] = nd(abc, m, W);
  w["nd_C"] = nd(C, m, W);
  w["nd_AC"] = nd(ac, m, W);
  w["nd_BC"] = nd(bc, m, W);
  return Verdict::fail(w, Rat(rhs - lhs));
}

}  // namespace lorcheck
