#include "lorcheck/schur_valuation.hpp"

namespace lorcheck {

namespace {

// Product expansion of the spec: multiset count vectors over the concatenated
// tuple-body list, with rational (nonnegative) coefficients.
struct Expansion {
  int n = 0;            // ambient dimension
  int body_count = 0;   // concatenated tuple bodies
  std::vector<std::pair<std::vector<int>, Rat>> monomials;
  std::vector<Polytope> bodies;
};

Expansion expand_spec(const SchurValuationSpec& spec, int n) {
  Expansion ex;
  ex.n = n;
  int total_degree = 0;
  std::vector<int> offsets;
  for (const auto& tuple : spec.tuples) {
    offsets.push_back(ex.body_count);
    const int e = static_cast<int>(tuple.bodies.size());
    if (e < 1) throw InputError("each tuple needs at least one body");
    if (!tuple.lambda.parts.empty() && tuple.lambda.parts[0] > e)
      throw InputError("partition width exceeds tuple body count");
    for (const auto& b : tuple.bodies) {
      if (b.ambient_dim() != n)
        throw InputError("body dimension does not match ambient dimension");
      ex.bodies.push_back(b);
    }
    ex.body_count += e;
    total_degree += partition_weight(tuple.lambda);
  }
  if (total_degree != n - 2)
    throw InputError("partition weights must sum to the dimension minus two");

  ex.monomials.emplace_back(std::vector<int>(ex.body_count, 0), Rat(1));
  for (std::size_t t = 0; t < spec.tuples.size(); ++t) {
    const auto& tuple = spec.tuples[t];
    HomPoly s = schur(tuple.lambda, static_cast<int>(tuple.bodies.size()));
    std::vector<std::pair<std::vector<int>, Rat>> next;
    for (const auto& [acc_counts, acc_coef] : ex.monomials)
      for (const auto& [mono, coef] : s.terms) {
        std::vector<int> counts = acc_counts;
        for (std::size_t j = 0; j < mono.size(); ++j)
          counts[offsets[t] + j] += mono[j];
        next.emplace_back(std::move(counts), acc_coef * coef);
      }
    ex.monomials = std::move(next);
  }
  return ex;
}

Rat theta(BodySystem& sys, const Expansion& ex, int slot_a, int slot_b) {
  Rat acc = 0;
  for (const auto& [counts, coef] : ex.monomials) {
    std::vector<int> full = counts;
    full.resize(sys.size(), 0);
    ++full[slot_a];
    ++full[slot_b];
    acc += coef * sys.mixed(full);
  }
  return acc;
}

}  // namespace

Rat schur_valuation(const SchurValuationSpec& spec, const Polytope& M,
                    const Polytope& N) {
  const int n = M.ambient_dim();
  if (N.ambient_dim() != n)
    throw InputError("body dimension does not match ambient dimension");
  Expansion ex = expand_spec(spec, n);
  std::vector<Polytope> all = ex.bodies;
  all.push_back(M);
  all.push_back(N);
  BodySystem sys(n, std::move(all));
  return theta(sys, ex, ex.body_count, ex.body_count + 1);
}

Verdict schur_af_check(const SchurValuationSpec& spec, const Polytope& M,
                       const Polytope& N) {
  const int n = M.ambient_dim();
  if (N.ambient_dim() != n)
    throw InputError("body dimension does not match ambient dimension");
  Expansion ex = expand_spec(spec, n);
  std::vector<Polytope> all = ex.bodies;
  all.push_back(M);
  all.push_back(N);
  BodySystem sys(n, std::move(all));
  const int slot_m = ex.body_count;
  const int slot_n = ex.body_count + 1;
  Rat tmn = theta(sys, ex, slot_m, slot_n);
  Rat tmm = theta(sys, ex, slot_m, slot_m);
  Rat tnn = theta(sys, ex, slot_n, slot_n);
  Rat margin = tmn * tmn - tmm * tnn;
  if (margin >= 0) return Verdict::ok_with_margin(margin);
  Witness w;
  w["kind"] = "schur-af-violation";
  w["theta_MN"] = rat_to_string(tmn);
  w["theta_MM"] = rat_to_string(tmm);
  w["theta_NN"] = rat_to_string(tnn);
  return Verdict::fail(w, margin);
}

}  // namespace lorcheck
