#include "lorcheck/mixed_volume.hpp"

#include <algorithm>
#include <numeric>

namespace lorcheck {

BodySystem::BodySystem(int ambient_dim, std::vector<Polytope> bodies)
    : n_(ambient_dim), bodies_(std::move(bodies)) {
  if (n_ < 1) throw InputError("ambient dimension must be positive");
  for (const auto& b : bodies_)
    if (b.ambient_dim() != n_)
      throw InputError("body dimension does not match ambient dimension");
}

void BodySystem::check_counts(const std::vector<int>& counts) const {
  if (counts.size() != bodies_.size())
    throw InputError("count vector length does not match body count");
  for (int c : counts)
    if (c < 0) throw InputError("multiplicities must be nonnegative");
}

const Polytope& BodySystem::sum_body(const std::vector<int>& counts) {
  check_counts(counts);
  auto it = sums_.find(counts);
  if (it != sums_.end()) return it->second;

  Polytope result = Polytope::trusted(n_, {RatVector::Zero(n_)}, 0);
  int nonzero = -1;
  int nonzero_count = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) {
      nonzero = static_cast<int>(i);
      ++nonzero_count;
    }
  if (nonzero_count == 1) {
    // c*K is a dilation: vertex map needs no hull pass.
    result = scale(bodies_[nonzero], Rat(counts[nonzero]));
  } else if (nonzero_count > 1) {
    std::vector<int> prev = counts;
    --prev[nonzero];
    result = minkowski_sum(sum_body(prev), bodies_[nonzero]);
  }
  return sums_.emplace(counts, std::move(result)).first->second;
}

const Rat& BodySystem::sum_volume(const std::vector<int>& counts) {
  check_counts(counts);
  auto it = vols_.find(counts);
  if (it != vols_.end()) return it->second;
  Rat v = volume(sum_body(counts));
  return vols_.emplace(counts, std::move(v)).first->second;
}

const Rat& BodySystem::mixed(const std::vector<int>& counts) {
  check_counts(counts);
  int total = std::accumulate(counts.begin(), counts.end(), 0);
  if (total != n_)
    throw InputError("mixed volume multiplicities must sum to the dimension");
  auto it = mixed_.find(counts);
  if (it != mixed_.end()) return it->second;

  Rat acc = 0;
  std::vector<int> sub(counts.size(), 0);
  // Iterate all 0 <= sub <= counts (odometer); skip the all-zero term.
  while (true) {
    std::size_t pos = 0;
    while (pos < sub.size() && sub[pos] == counts[pos]) {
      sub[pos] = 0;
      ++pos;
    }
    if (pos == sub.size()) break;
    ++sub[pos];
    int size = std::accumulate(sub.begin(), sub.end(), 0);
    Rat mult = 1;
    for (std::size_t i = 0; i < sub.size(); ++i)
      mult *= Rat(binomial(counts[i], sub[i]));
    Rat term = mult * sum_volume(sub);
    if ((n_ - size) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  acc /= Rat(factorial(n_));
  return mixed_.emplace(counts, std::move(acc)).first->second;
}

const Rat& BodySystem::mixed_indices(const std::vector<int>& indices) {
  if (static_cast<int>(indices.size()) != n_)
    throw InputError("mixed volume needs exactly n body slots");
  std::vector<int> counts(bodies_.size(), 0);
  for (int idx : indices) {
    if (idx < 0 || idx >= size()) throw InputError("body index out of range");
    ++counts[idx];
  }
  return mixed(counts);
}

Rat mixed_volume(const MixedVolumeSpec& spec) {
  if (spec.bodies.empty()) throw InputError("mixed volume needs bodies");
  if (spec.bodies.size() != spec.multiplicities.size())
    throw InputError("bodies and multiplicities must have equal length");
  int n = spec.bodies[0].ambient_dim();
  BodySystem sys(n, spec.bodies);
  return sys.mixed(spec.multiplicities);
}

HomPoly volume_polynomial(BodySystem& sys) {
  const int n = sys.ambient_dim();
  const int m = sys.size();
  if (m < 1) throw InputError("volume polynomial needs at least one body");
  std::vector<std::pair<MultiIndex, Rat>> terms;
  Rat nfact(factorial(n));
  for (const MultiIndex& mu : multi_indices_of_degree(m, n)) {
    Rat denom = 1;
    for (int e : mu) denom *= Rat(factorial(e));
    std::vector<int> counts(mu.begin(), mu.end());
    Rat coef = nfact / denom * sys.mixed(counts);
    if (coef != 0) terms.emplace_back(mu, std::move(coef));
  }
  return make_hompoly(m, n, terms);
}

HomPoly volume_polynomial(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) throw InputError("volume polynomial needs at least one body");
  BodySystem sys(bodies[0].ambient_dim(), bodies);
  return volume_polynomial(sys);
}

Verdict rkt_convex_check(const Polytope& B, const std::vector<Polytope>& A,
                         int k) {
  const int n = B.ambient_dim();
  const int m = static_cast<int>(A.size());
  if (k < 0 || k > m) throw InputError("k must satisfy 0 <= k <= m");
  if (m > n) throw InputError("at most n structuring bodies allowed");
  for (const auto& a : A)
    if (a.ambient_dim() != n)
      throw InputError("body dimension does not match ambient dimension");

  std::vector<Polytope> all;
  all.reserve(m + 1);
  all.push_back(B);
  for (const auto& a : A) all.push_back(a);
  BodySystem sys(n, std::move(all));

  auto counts_with_B = [&](int b_mult, int lo, int hi) {
    // body 0 gets b_mult; structuring bodies with 1-based positions in
    // (lo, hi] get multiplicity 1.
    std::vector<int> counts(m + 1, 0);
    counts[0] = b_mult;
    for (int i = lo + 1; i <= hi; ++i) counts[i] = 1;
    return counts;
  };

  Rat vol_b = sys.sum_volume(counts_with_B(1, 0, 0));
  Rat lhs = vol_b * sys.mixed(counts_with_B(n - m, 0, m));
  Rat rhs = Rat(binomial(m, k)) * sys.mixed(counts_with_B(n - k, 0, k)) *
            sys.mixed(counts_with_B(n - m + k, k, m));
  Rat margin = rhs - lhs;
  if (margin >= 0) return Verdict::ok_with_margin(margin);
  Witness w;
  w["kind"] = "convex-rkt-violation";
  w["m"] = m;
  w["k"] = k;
  w["lhs"] = rat_to_string(lhs);
  w["rhs"] = rat_to_string(rhs);
  return Verdict::fail(w, margin);
}

Polytope bipyramid_example() {
  std::vector<RatVector> pts;
  for (long sx : {-1L, 1L})
    for (long sy : {-1L, 1L}) pts.push_back(rat_vector({sx, sy, 0}));
  pts.push_back(rat_vector({0, 0, 1}));
  pts.push_back(rat_vector({0, 0, -1}));
  return Polytope(3, std::move(pts));
}

Witness one_rayleigh_counterexample_report() {
  Polytope B = bipyramid_example();
  Rat vol_b = volume(B);
  Rat vol_p1 = volume(project_drop(B, {0}));
  Rat vol_p2 = volume(project_drop(B, {1}));
  Rat vol_p12 = volume(project_drop(B, {0, 1}));
  Rat lhs = vol_b * vol_p12;
  Rat rhs1 = vol_p1 * vol_p2;
  Rat rhs2 = Rat(2) * (Rat(1) - Rat(1, 3)) * rhs1;

  Witness report;
  report["vol_B"] = rat_to_string(vol_b);
  report["vol_p1B"] = rat_to_string(vol_p1);
  report["vol_p2B"] = rat_to_string(vol_p2);
  report["vol_p12B"] = rat_to_string(vol_p12);
  report["lhs"] = rat_to_string(lhs);
  report["rhs_c1"] = rat_to_string(rhs1);
  report["rhs_sharpened"] = rat_to_string(rhs2);
  report["c1_violated"] = (lhs > rhs1);
  report["sharpened_holds"] = (lhs <= rhs2);
  report["sharpened_equality"] = (lhs == rhs2);
  return report;
}

}  // namespace lorcheck
