#include "lorcheck/inequalities.hpp"

#include <random>

namespace lorcheck {

Rat rkt_constant(int d, int k, int l) {
  if (d < 0 || k < 0 || l < 0 || k + l > d)
    throw InputError("rkt_constant expects k, l >= 0 and k + l <= d");
  Rat two_pow = Rat(Int(1) << static_cast<unsigned>(k * l));
  Rat num(factorial(d - k) * factorial(d - l));
  Rat den(factorial(d) * factorial(d - k - l));
  return two_pow * num / den;
}

Rat pr_constant(int d) {
  if (d < 0) throw InputError("pr_constant expects d >= 0");
  Rat best = 0;
  for (int k = 0; k <= d; ++k)
    for (int l = 0; k + l <= d; ++l) {
      Rat c = rkt_constant(d, k, l);
      if (c > best) best = c;
    }
  return best;
}

std::vector<std::pair<MultiIndex, MultiIndex>> enumerate_splittings(int nvars,
                                                                    int degree) {
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  for (int t = 0; t <= degree; ++t) {
    for (int k = 0; k <= t; ++k) {
      auto betas = multi_indices_of_degree(nvars, k);
      auto gammas = multi_indices_of_degree(nvars, t - k);
      for (const auto& b : betas)
        for (const auto& g : gammas) out.emplace_back(b, g);
    }
  }
  return out;
}

namespace {

// Lexicographic unranking of the multi-index of total degree d in m variables.
MultiIndex unrank_composition(int m, int d, Int idx) {
  MultiIndex out(m, 0);
  int rem = d;
  for (int pos = 0; pos + 1 < m; ++pos) {
    for (int e = 0; e <= rem; ++e) {
      Int block = binomial(rem - e + m - pos - 2, m - pos - 2);
      if (idx < block) {
        out[pos] = e;
        rem -= e;
        break;
      }
      idx -= block;
    }
  }
  if (m > 0) out[m - 1] = rem;
  return out;
}

}  // namespace

std::vector<std::pair<MultiIndex, MultiIndex>> sweep_splittings(int nvars,
                                                                int degree,
                                                                const Sweep& sweep) {
  if (sweep.full) return enumerate_splittings(nvars, degree);
  if (sweep.samples <= 0) throw InputError("sample sweep needs a positive sample count");
  // Pairs (beta, gamma) with |beta| + |gamma| <= d are compositions of d into
  // 2 nvars + 1 parts (the last part is slack).
  const int m = 2 * nvars + 1;
  Int total = binomial(degree + 2 * nvars, 2 * nvars);
  if (!total.fits_ulong_p())
    throw InputError("splitting space too large to sample uniformly");
  std::mt19937_64 eng(sweep.seed);
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  out.reserve(static_cast<std::size_t>(sweep.samples));
  unsigned long total_ul = total.get_ui();
  for (std::int64_t s = 0; s < sweep.samples; ++s) {
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t bound = UINT64_MAX - (UINT64_MAX % total_ul);
    std::uint64_t r = eng();
    while (r >= bound) r = eng();
    MultiIndex comp = unrank_composition(m, degree, Int(static_cast<unsigned long>(r % total_ul)));
    MultiIndex beta(comp.begin(), comp.begin() + nvars);
    MultiIndex gamma(comp.begin() + nvars, comp.begin() + 2 * nvars);
    out.emplace_back(std::move(beta), std::move(gamma));
  }
  return out;
}

namespace {

void require_nonnegative_point(const RatVector& x, int nvars) {
  if (x.size() != nvars) throw InputError("point dimension mismatch");
  for (int i = 0; i < x.size(); ++i)
    if (x(i) < 0) throw InputError("point with negative coordinate");
}

// Shared driver for the two rKT variants; with_factor selects the effective
// 2^{kl} constant versus the optimal form's constant 1.
Verdict rkt_driver(const HomPoly& f, const std::vector<RatVector>& points,
                   const Sweep& sweep, bool with_factor) {
  for (const auto& x : points) require_nonnegative_point(x, f.nvars);
  auto splittings = sweep_splittings(f.nvars, f.degree, sweep);
  DerivativeTable table(f);
  std::optional<Rat> min_margin;
  for (const auto& x : points) {
    std::map<MultiIndex, Rat> evals;
    auto value = [&](const MultiIndex& a) -> const Rat& {
      auto it = evals.find(a);
      if (it == evals.end())
        it = evals.emplace(a, evaluate(table.at(a), x)).first;
      return it->second;
    };
    const Rat& fx = value(MultiIndex(f.nvars, 0));
    for (const auto& [beta, gamma] : splittings) {
      MultiIndex alpha = mi_add(beta, gamma);
      Rat c = with_factor ? rkt_constant(f.degree, degree(beta), degree(gamma))
                          : Rat(1);
      Rat lhs = fx * value(alpha);
      Rat rhs = c * value(beta) * value(gamma);
      Rat margin = rhs - lhs;
      if (margin < 0) {
        Witness w;
        w["kind"] = with_factor ? "rkt-violation" : "rkt-optimal-violation";
        w["point"] = witness_point(x);
        w["beta"] = beta;
        w["gamma"] = gamma;
        return Verdict::fail(std::move(w), margin);
      }
      if (!min_margin || margin < *min_margin) min_margin = margin;
    }
  }
  Verdict v = Verdict::ok();
  v.margin = min_margin;
  return v;
}

}  // namespace

Verdict rkt_check(const HomPoly& f, const std::vector<RatVector>& points,
                  const Sweep& sweep) {
  return rkt_driver(f, points, sweep, true);
}

Verdict rkt_optimal_check(const HomPoly& f, const std::vector<RatVector>& points,
                          const Sweep& sweep) {
  return rkt_driver(f, points, sweep, false);
}

Verdict pr_check(const HomPoly& f,
                 const std::vector<std::array<RatVector, 3>>& triples) {
  Rat cd = pr_constant(f.degree);
  std::optional<Rat> min_margin;
  for (const auto& [x, y, z] : triples) {
    require_nonnegative_point(x, f.nvars);
    require_nonnegative_point(y, f.nvars);
    require_nonnegative_point(z, f.nvars);
    Rat lhs = evaluate(f, x) * evaluate(f, x + y + z);
    Rat rhs = cd * evaluate(f, x + y) * evaluate(f, x + z);
    Rat margin = rhs - lhs;
    if (margin < 0) {
      Witness w;
      w["kind"] = "pr-violation";
      w["x"] = witness_point(x);
      w["y"] = witness_point(y);
      w["z"] = witness_point(z);
      return Verdict::fail(std::move(w), margin);
    }
    if (!min_margin || margin < *min_margin) min_margin = margin;
  }
  Verdict v = Verdict::ok();
  v.margin = min_margin;
  return v;
}

Verdict supermodularity_check(const HomPoly& f,
                              const std::vector<std::array<RatVector, 3>>& triples) {
  std::optional<Rat> min_margin;
  for (const auto& [x, y, z] : triples) {
    require_nonnegative_point(x, f.nvars);
    require_nonnegative_point(y, f.nvars);
    require_nonnegative_point(z, f.nvars);
    Rat margin = evaluate(f, x + y + z) + evaluate(f, x) - evaluate(f, x + y) -
                 evaluate(f, x + z);
    if (margin < 0) {
      Witness w;
      w["kind"] = "supermodularity-violation";
      w["x"] = witness_point(x);
      w["y"] = witness_point(y);
      w["z"] = witness_point(z);
      return Verdict::fail(std::move(w), margin);
    }
    if (!min_margin || margin < *min_margin) min_margin = margin;
  }
  Verdict v = Verdict::ok();
  v.margin = min_margin;
  return v;
}

Verdict af_form_check(const HomPoly& f,
                      const std::vector<std::vector<RatVector>>& tuples) {
  if (f.degree < 2) throw InputError("af_form_check expects degree >= 2");
  std::optional<Rat> min_margin;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& vs = tuples[t];
    if (static_cast<int>(vs.size()) != f.degree)
      throw InputError("af_form_check tuple must contain degree-many vectors");
    for (const auto& v : vs)
      if (v.size() != f.nvars) throw InputError("vector dimension mismatch");
    // v1 may have arbitrary sign; v2 and the fixed tail must be nonnegative.
    for (std::size_t i = 1; i < vs.size(); ++i)
      for (int c = 0; c < vs[i].size(); ++c)
        if (vs[i](c) < 0)
          throw InputError("af_form_check expects nonnegative vectors after the first");
    std::vector<RatVector> cross = vs;
    std::vector<RatVector> first = vs;
    first[1] = vs[0];
    std::vector<RatVector> second = vs;
    second[0] = vs[1];
    Rat fc = multilinear_form(f, cross);
    Rat f11 = multilinear_form(f, first);
    Rat f22 = multilinear_form(f, second);
    Rat margin = fc * fc - f11 * f22;
    if (margin < 0) {
      Witness w;
      w["kind"] = "af-form-violation";
      w["tuple_index"] = t;
      w["v1"] = witness_point(vs[0]);
      w["v2"] = witness_point(vs[1]);
      return Verdict::fail(std::move(w), margin);
    }
    if (!min_margin || margin < *min_margin) min_margin = margin;
  }
  Verdict v = Verdict::ok();
  v.margin = min_margin;
  return v;
}

}  // namespace lorcheck
