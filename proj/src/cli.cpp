#include "lorcheck/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lorcheck/fuzz.hpp"
#include "lorcheck/lorentzian.hpp"
#include "lorcheck/mixed_discriminant.hpp"
#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/numerical_dim.hpp"
#include "lorcheck/schur.hpp"
#include "lorcheck/schur_valuation.hpp"

namespace lorcheck {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// ---------------------------------------------------------------------------
// Fuzz suites
// ---------------------------------------------------------------------------

struct SuiteCtx {
  const FuzzOptions& opts;
  Clock::time_point start = Clock::now();
  std::string digest_buf;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  Json first_violation = nullptr;
  std::int64_t completed = 0;
  bool truncated = false;

  explicit SuiteCtx(const FuzzOptions& o) : opts(o) {}

  bool over_budget() const {
    return opts.budget_ms > 0 && elapsed_ms(start) > opts.budget_ms;
  }
  void note_instance(const Json& j) {
    digest_buf += j.dump();
    digest_buf += '\n';
  }
  void record(const char* check, std::int64_t trial, const Verdict& v) {
    ++checked;
    if (!v.holds) {
      ++violations;
      if (first_violation.is_null()) {
        first_violation = Json::object();
        first_violation["trial"] = trial;
        first_violation["check"] = check;
        first_violation["witness"] = v.witness ? *v.witness : Json(nullptr);
      }
    }
  }
  void record_bool(const char* check, std::int64_t trial, bool ok,
                   const Json& witness) {
    Verdict v = ok ? Verdict::ok() : Verdict::fail(witness);
    record(check, trial, v);
  }
};

RatVector positive_point(fuzz::Rng& rng, int nvars, long max_num, long max_den) {
  RatVector x(nvars);
  for (int i = 0; i < nvars; ++i) {
    long den = rng.uniform(1, max_den);
    x(i) = rat(rng.uniform(1, max_num * den), den);
  }
  return x;
}

struct IneqCorpusItem {
  HomPoly poly;
  int nvars = 0;
  int degree = 0;
};

IneqCorpusItem ineq_corpus_item(fuzz::Rng& rng) {
  IneqCorpusItem item;
  item.nvars = static_cast<int>(rng.uniform(2, 5));
  item.degree = static_cast<int>(rng.uniform(2, 5));
  item.poly = fuzz::linear_form_product(rng, item.nvars, item.degree);
  return item;
}

void suite_rkt(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  IneqCorpusItem item = ineq_corpus_item(rng);
  std::vector<RatVector> pts;
  for (int i = 0; i < 10; ++i)
    pts.push_back(fuzz::nonneg_point(rng, item.nvars, 2, 2));
  Sweep sweep = ctx.opts.sweep_override
                    ? ctx.opts.sweep
                    : auto_sweep(item.nvars, item.degree,
                                 ctx.opts.seed ^ static_cast<std::uint64_t>(trial));
  Json inst;
  inst["poly"] = hompoly_to_json(item.poly);
  for (const auto& p : pts) inst["points"].push_back(vector_to_json(p));
  ctx.note_instance(inst);
  ctx.record("rkt", trial, rkt_check(item.poly, pts, sweep));
}

void suite_rayleigh(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  IneqCorpusItem item = ineq_corpus_item(rng);
  std::vector<RatVector> pts;
  for (int i = 0; i < 5; ++i)
    pts.push_back(fuzz::nonneg_point(rng, item.nvars, 2, 2));
  Json inst;
  inst["poly"] = hompoly_to_json(item.poly);
  ctx.note_instance(inst);
  ctx.record("rayleigh", trial,
             c_rayleigh_check(item.poly, rayleigh_constant(item.degree), pts));
}

void suite_pr_supermod(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  IneqCorpusItem item = ineq_corpus_item(rng);
  std::vector<std::array<RatVector, 3>> triples;
  for (int i = 0; i < 5; ++i)
    triples.push_back({fuzz::nonneg_point(rng, item.nvars, 2, 2),
                       fuzz::nonneg_point(rng, item.nvars, 2, 2),
                       fuzz::nonneg_point(rng, item.nvars, 2, 2)});
  Json inst;
  inst["poly"] = hompoly_to_json(item.poly);
  ctx.note_instance(inst);
  ctx.record("pr", trial, pr_check(item.poly, triples));
  ctx.record("supermod", trial, supermodularity_check(item.poly, triples));
}

void suite_af_form(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  IneqCorpusItem item = ineq_corpus_item(rng);
  std::vector<std::vector<RatVector>> tuples;
  for (int i = 0; i < 3; ++i) {
    std::vector<RatVector> tuple;
    tuple.push_back(fuzz::any_point(rng, item.nvars, 2, 2));
    for (int k = 1; k < item.degree; ++k)
      tuple.push_back(fuzz::nonneg_point(rng, item.nvars, 2, 2));
    tuples.push_back(std::move(tuple));
  }
  Json inst;
  inst["poly"] = hompoly_to_json(item.poly);
  ctx.note_instance(inst);
  ctx.record("af-form", trial, af_form_check(item.poly, tuples));
}

void suite_quad_equiv(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  IneqCorpusItem item = ineq_corpus_item(rng);
  Json inst;
  inst["poly"] = hompoly_to_json(item.poly);
  ctx.note_instance(inst);
  for (int i = 0; i < 5; ++i) {
    RatVector x = positive_point(rng, item.nvars, 2, 2);
    ctx.record("quad-equiv", trial, quadratic_class_equiv(item.poly, x));
  }
}

// Direct inclusion-exclusion over explicit slots, independent of the
// count-grouped implementation in BodySystem.
Rat slotwise_mixed_oracle(const std::vector<const Polytope*>& slots) {
  const int n = static_cast<int>(slots.size());
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Polytope sum = Polytope::trusted(slots[0]->ambient_dim(),
                                     {RatVector::Zero(slots[0]->ambient_dim())},
                                     0);
    bool first = true;
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum = first ? *slots[i] : minkowski_sum(sum, *slots[i]);
        first = false;
        ++size;
      }
    Rat term = volume(sum);
    if ((n - size) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc / Rat(factorial(n));
}

void suite_mixed_volume(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  const int n = static_cast<int>(rng.uniform(2, 3));
  std::vector<Polytope> bodies;
  for (int i = 0; i < 3; ++i) bodies.push_back(fuzz::polytope(rng, n, 5, 2, 2));
  Json inst;
  for (const auto& b : bodies) inst["bodies"].push_back(polytope_to_json(b));
  ctx.note_instance(inst);

  BodySystem sys(n, bodies);

  // Random multiset; compare against the slot-list oracle.
  std::vector<int> counts(3, 0);
  std::vector<const Polytope*> slots;
  for (int i = 0; i < n; ++i) {
    int pick = static_cast<int>(rng.uniform(0, 2));
    ++counts[pick];
    slots.push_back(&bodies[pick]);
  }
  Rat grouped = sys.mixed(counts);
  Rat oracle = slotwise_mixed_oracle(slots);
  {
    Json w;
    w["kind"] = "oracle-mismatch";
    w["counts"] = counts;
    w["grouped"] = rat_to_string(grouped);
    w["oracle"] = rat_to_string(oracle);
    ctx.record_bool("mixed-volume-oracle", trial, grouped == oracle, w);
  }

  // Diagonal normalization V(K,...,K) = vol K.
  {
    std::vector<int> diag(3, 0);
    int which = static_cast<int>(rng.uniform(0, 2));
    diag[which] = n;
    Json w;
    w["kind"] = "diagonal-mismatch";
    w["body"] = which;
    ctx.record_bool("mixed-volume-diagonal", trial,
                    sys.mixed(diag) == volume(bodies[which]), w);
  }

  // Minkowski linearity in the first slot: V(K+L, rest) = V(K, rest)+V(L, rest)
  // and V(2K, rest) = 2 V(K, rest).
  {
    std::vector<Polytope> ext = bodies;
    ext.push_back(minkowski_sum(bodies[0], bodies[1]));
    ext.push_back(scale(bodies[0], Rat(2)));
    BodySystem wide(n, ext);
    std::vector<int> rest;
    for (int i = 0; i + 1 < n; ++i)
      rest.push_back(static_cast<int>(rng.uniform(0, 2)));
    auto idxs = [&](int first) {
      std::vector<int> v{first};
      v.insert(v.end(), rest.begin(), rest.end());
      return v;
    };
    Rat sum_kl = wide.mixed_indices(idxs(3));
    Rat split = wide.mixed_indices(idxs(0)) + wide.mixed_indices(idxs(1));
    Json w;
    w["kind"] = "multilinearity-mismatch";
    w["lhs"] = rat_to_string(sum_kl);
    w["rhs"] = rat_to_string(split);
    ctx.record_bool("mixed-volume-additive", trial, sum_kl == split, w);
    Rat doubled = wide.mixed_indices(idxs(4));
    Rat twice = Rat(2) * wide.mixed_indices(idxs(0));
    Json w2;
    w2["kind"] = "homogeneity-mismatch";
    w2["lhs"] = rat_to_string(doubled);
    w2["rhs"] = rat_to_string(twice);
    ctx.record_bool("mixed-volume-scaling", trial, doubled == twice, w2);
  }

  // Translation invariance.
  {
    RatVector t(n);
    for (int j = 0; j < n; ++j) t(j) = Rat(rng.uniform(-2, 2));
    std::vector<Polytope> shifted = bodies;
    shifted[0] = translate(bodies[0], t);
    BodySystem sys2(n, shifted);
    std::vector<int> counts2(3, 0);
    counts2[0] = 1;
    for (int i = 1; i < n; ++i)
      ++counts2[static_cast<int>(rng.uniform(0, 2))];
    Json w;
    w["kind"] = "translation-variance";
    ctx.record_bool("mixed-volume-translation", trial,
                    sys.mixed(counts2) == sys2.mixed(counts2), w);
  }

  // Reduction formula V(K[n-1], [0,e_i]) = vol_{n-1}(p_i K) / n.
  {
    int axis = static_cast<int>(rng.uniform(0, n - 1));
    BodySystem red(n, {bodies[0], segment(n, axis)});
    std::vector<int> c{n - 1, 1};
    Rat via_mixed = red.mixed(c);
    Rat via_projection = volume(project_drop(bodies[0], {axis})) / Rat(n);
    Json w;
    w["kind"] = "reduction-mismatch";
    w["axis"] = axis;
    w["mixed"] = rat_to_string(via_mixed);
    w["projection"] = rat_to_string(via_projection);
    ctx.record_bool("mixed-volume-reduction", trial, via_mixed == via_projection,
                    w);
  }
}

std::vector<Polytope> volume_poly_bodies(fuzz::Rng& rng, int* n_out) {
  while (true) {
    int pick = static_cast<int>(rng.uniform(1, 4));
    int n = pick == 4 ? 4 : (pick == 1 ? 2 : 3);
    int k = static_cast<int>(rng.uniform(1, 4));
    std::vector<Polytope> bodies;
    for (int i = 0; i < k; ++i) {
      if (rng.chance(1, 2))
        bodies.push_back(fuzz::polytope(rng, n, n + 1, 2, 2));
      else
        bodies.push_back(fuzz::nonpoint_lattice_polytope(rng, n, n + 1, 2));
    }
    Polytope total = bodies[0];
    for (int i = 1; i < k; ++i) total = minkowski_sum(total, bodies[i]);
    if (total.affine_dim() == n) {
      *n_out = n;
      return bodies;
    }
  }
}

void suite_volume_poly(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  int n = 0;
  std::vector<Polytope> bodies = volume_poly_bodies(rng, &n);
  Json inst;
  for (const auto& b : bodies) inst["bodies"].push_back(polytope_to_json(b));
  ctx.note_instance(inst);

  HomPoly f = volume_polynomial(bodies);
  ctx.record("volume-poly-lorentzian", trial, is_lorentzian(f));
  for (int i = 0; i < 5; ++i) {
    RatVector x = positive_point(rng, static_cast<int>(bodies.size()), 2, 2);
    Inertia in = inertia(hessian_at(f, x));
    Json w;
    w["kind"] = "hessian-signature";
    w["point"] = vector_to_json(x);
    w["positive"] = in.positive;
    w["zero"] = in.zero;
    w["negative"] = in.negative;
    ctx.record_bool("volume-poly-hessian", trial, in.positive == 1, w);
  }
}

void suite_convex_rkt(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  const int n = rng.chance(3, 4) ? 3 : 4;
  const int m = static_cast<int>(rng.uniform(0, std::min(n, 3)));
  const int k = static_cast<int>(rng.uniform(0, m));
  Polytope B = fuzz::polytope(rng, n, n + 2, 2, 2);
  std::vector<Polytope> A;
  for (int i = 0; i < m; ++i) {
    if (n == 4)
      A.push_back(fuzz::nonpoint_lattice_polytope(rng, n, 3, 2));
    else
      A.push_back(fuzz::polytope(rng, n, 4, 2, 2));
  }
  Json inst;
  inst["B"] = polytope_to_json(B);
  inst["k"] = k;
  for (const auto& a : A) inst["A"].push_back(polytope_to_json(a));
  ctx.note_instance(inst);
  ctx.record("convex-rkt", trial, rkt_convex_check(B, A, k));
}

void suite_schur_af(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  const int n = rng.chance(2, 3) ? 3 : 4;
  SchurValuationSpec spec = fuzz::schur_spec(rng, n);
  Polytope M = fuzz::polytope(rng, n, 4, 2, 2);
  bool equality_trial = (trial % 5 == 4);
  Polytope N = equality_trial
                   ? translate(M, fuzz::any_point(rng, n, 2, 1))
                   : fuzz::polytope(rng, n, 4, 2, 2);
  Json inst;
  inst["n"] = n;
  inst["M"] = polytope_to_json(M);
  inst["N"] = polytope_to_json(N);
  ctx.note_instance(inst);

  Verdict v = schur_af_check(spec, M, N);
  ctx.record("schur-af", trial, v);
  if (equality_trial) {
    Json w;
    w["kind"] = "expected-equality";
    w["margin"] = v.margin ? rat_to_string(*v.margin) : "absent";
    ctx.record_bool("schur-af-equality", trial,
                    v.holds && v.margin && *v.margin == 0, w);
  }
}

void suite_md_hodge(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  const int n = static_cast<int>(rng.uniform(2, 4));
  const int m = static_cast<int>(rng.uniform(2, n));
  std::vector<RatMatrix> hyp;
  for (int i = 0; i < m - 2; ++i) hyp.push_back(fuzz::pd_matrix(rng, n, 2));
  RatMatrix W = fuzz::pd_matrix(rng, n, 2);
  Json inst;
  inst["n"] = n;
  inst["m"] = m;
  inst["W"] = matrix_to_json(W);
  ctx.note_instance(inst);

  RatMatrix gram = md_hodge_form(hyp, W, m);
  Inertia in = inertia(gram);
  const int dim = n * (n + 1) / 2;
  Json w;
  w["kind"] = "hodge-signature";
  w["positive"] = in.positive;
  w["zero"] = in.zero;
  w["negative"] = in.negative;
  ctx.record_bool("md-hodge-inertia", trial,
                  in.positive == 1 && in.zero == 0 && in.negative == dim - 1, w);

  RatMatrix A = fuzz::pd_matrix(rng, n, 2);
  RatMatrix Bm = fuzz::sym_matrix(rng, n, 2);
  ctx.record("md-af", trial, md_af_check(A, Bm, hyp, W, m));
}

void suite_polymatroid(SuiteCtx& ctx, std::int64_t trial, fuzz::Rng& rng) {
  int roll = static_cast<int>(rng.uniform(1, 8));
  int n = roll <= 4 ? 2 : (roll <= 7 ? 3 : 4);
  int s = static_cast<int>(rng.uniform(1, n == 4 ? 4 : 6));
  GroundSet g;
  for (int i = 0; i < s; ++i)
    g.bodies.push_back(fuzz::nonpoint_lattice_polytope(rng, n, 3, 2));
  g.m = static_cast<int>(rng.uniform(1, n));
  g.W = standard_simplex(n);
  Json inst;
  inst["m"] = g.m;
  inst["n"] = n;
  for (const auto& b : g.bodies) inst["bodies"].push_back(polytope_to_json(b));
  ctx.note_instance(inst);

  RankOracle oracle(g);
  ctx.record("polymatroid", trial, check_polymatroid(oracle));

  bool oracle_ok = true;
  Json w;
  for (unsigned mask = 0; mask < (1u << s) && oracle_ok; ++mask) {
    int expected =
        mask == 0 ? 0 : std::min(g.m, affine_dim(oracle.subset_sum(mask)));
    if (oracle.rank_mask(mask) != expected) {
      oracle_ok = false;
      w["kind"] = "nd-oracle-mismatch";
      w["mask"] = mask;
      w["rank"] = oracle.rank_mask(mask);
      w["expected"] = expected;
    }
  }
  ctx.record_bool("nd-oracle", trial, oracle_ok, w);
}

using SuiteFn = void (*)(SuiteCtx&, std::int64_t, fuzz::Rng&);

SuiteFn suite_by_name(const std::string& name) {
  if (name == "rkt") return suite_rkt;
  if (name == "rayleigh") return suite_rayleigh;
  if (name == "pr-supermod") return suite_pr_supermod;
  if (name == "af-form") return suite_af_form;
  if (name == "quad-equiv") return suite_quad_equiv;
  if (name == "mixed-volume") return suite_mixed_volume;
  if (name == "volume-poly") return suite_volume_poly;
  if (name == "convex-rkt") return suite_convex_rkt;
  if (name == "schur-af") return suite_schur_af;
  if (name == "md-hodge") return suite_md_hodge;
  if (name == "polymatroid") return suite_polymatroid;
  throw InputError("unknown fuzz suite \"" + name + "\"");
}

Json sweep_to_json(const Sweep& s) {
  if (s.full) return Json("full");
  Json j;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  return j;
}

}  // namespace

Sweep auto_sweep(int nvars, int degree, std::uint64_t seed) {
  Int count = binomial(degree + 2 * nvars, 2 * nvars);
  if (count <= 10000) return Sweep::full_sweep();
  return Sweep::sample(1000, seed);
}

Json run_fuzz_suite(const FuzzOptions& opts) {
  if (opts.trials < 1) throw InputError("trials must be at least 1");
  SuiteFn fn = suite_by_name(opts.suite);
  SuiteCtx ctx(opts);
  fuzz::Rng root(opts.seed);
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    if (ctx.over_budget()) {
      ctx.truncated = true;
      break;
    }
    fuzz::Rng rng = root.fork(static_cast<std::uint64_t>(t));
    fn(ctx, t, rng);
    ++ctx.completed;
  }

  Json rep;
  rep["command"] = "fuzz";
  rep["suite"] = opts.suite;
  rep["seed"] = opts.seed;
  rep["trials"] = opts.trials;
  rep["trials_completed"] = ctx.completed;
  rep["truncated"] = ctx.truncated;
  rep["sweep"] = opts.sweep_override ? sweep_to_json(opts.sweep) : Json("auto");
  rep["workers"] = 1;
  rep["checked"] = ctx.checked;
  rep["violations"] = ctx.violations;
  rep["first_violation"] = ctx.first_violation;
  rep["corpus_digest"] = [&] {
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << fnv1a64(ctx.digest_buf);
    return hex.str();
  }();
  rep["timing"] = Json::object();
  rep["timing"]["total_ms"] = elapsed_ms(ctx.start);
  if (!opts.dump_path.empty()) {
    std::ofstream dump(opts.dump_path);
    if (!dump) throw InputError("cannot open " + opts.dump_path + " for writing");
    dump << ctx.digest_buf;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reproduction suite
// ---------------------------------------------------------------------------

namespace {

HomPoly huh_polynomial() {
  std::vector<std::pair<MultiIndex, Rat>> terms = {
      {{3, 0, 0}, Rat(14)}, {{2, 1, 0}, Rat(6)}, {{2, 0, 1}, Rat(24)},
      {{1, 1, 1}, Rat(12)}, {{1, 0, 2}, Rat(6)}, {{0, 1, 2}, Rat(3)}};
  return make_hompoly(3, 3, terms);
}

std::pair<Json, int> reproduce_huh() {
  HomPoly f = huh_polynomial();
  std::vector<RatVector> pts = {rat_vector({1, 0, 0}), rat_vector({0, 1, 0}),
                                rat_vector({0, 0, 1}), rat_vector({1, 1, 1})};
  Verdict lor = is_lorentzian(f);
  Verdict optimal = rkt_optimal_check(f, pts);
  Verdict general = rkt_check(f, pts);

  Json rep;
  rep["command"] = "reproduce";
  rep["name"] = "huh-example";
  rep["expected_violation"] = true;
  rep["poly"] = hompoly_to_json(f);
  rep["lorentzian"] = verdict_to_json(lor);
  rep["rkt_optimal"] = verdict_to_json(optimal);
  rep["rkt"] = verdict_to_json(general);
  bool ok = lor.holds && !optimal.holds && general.holds;
  rep["ok"] = ok;
  return {rep, ok ? 0 : 1};
}

std::pair<Json, int> reproduce_bipyramid() {
  Json rep;
  rep["command"] = "reproduce";
  rep["name"] = "bipyramid";
  rep["expected_violation"] = true;
  Json inner = one_rayleigh_counterexample_report();
  for (auto it = inner.begin(); it != inner.end(); ++it) rep[it.key()] = *it;

  Polytope B = bipyramid_example();
  std::vector<Polytope> A = {segment(3, 0), segment(3, 1)};
  Verdict sharpened = rkt_convex_check(B, A, 1);
  rep["convex_rkt"] = verdict_to_json(sharpened);

  bool ok = inner["c1_violated"].get<bool>() &&
            inner["sharpened_holds"].get<bool>() &&
            inner["sharpened_equality"].get<bool>() && sharpened.holds;
  rep["ok"] = ok;
  return {rep, ok ? 0 : 1};
}

std::pair<Json, int> reproduce_schur_examples() {
  Json rep;
  rep["command"] = "reproduce";
  rep["name"] = "schur-examples";
  rep["expected_violation"] = false;
  Json checks = Json::array();
  bool all = true;
  auto push = [&](const char* name, bool ok, const HomPoly& got) {
    Json c;
    c["name"] = name;
    c["ok"] = ok;
    c["poly"] = hompoly_to_json(got);
    checks.push_back(std::move(c));
    all = all && ok;
  };

  {
    HomPoly got = schur(make_partition({2}), 3);
    push("s_(2) = sigma_2", got == elementary_symmetric(2, 3), got);
  }
  {
    HomPoly got = schur(make_partition({1, 1}), 2);
    HomPoly s1 = elementary_symmetric(1, 2);
    HomPoly expect = add(mul(s1, s1), scale(elementary_symmetric(2, 2), Rat(-1)));
    push("s_(1,1) = sigma_1^2 - sigma_2", got == expect, got);
  }
  {
    HomPoly got = schur(make_partition({2, 1}), 3);
    HomPoly expect = add(mul(elementary_symmetric(1, 3), elementary_symmetric(2, 3)),
                         scale(elementary_symmetric(3, 3), Rat(-1)));
    push("s_(2,1) = sigma_1 sigma_2 - sigma_3", got == expect, got);
  }
  {
    HomPoly got = schur(make_partition({1, 1, 1}), 3);
    HomPoly s1 = elementary_symmetric(1, 3);
    HomPoly expect = add(
        add(mul(s1, mul(s1, s1)),
            scale(mul(s1, elementary_symmetric(2, 3)), Rat(-2))),
        elementary_symmetric(3, 3));
    push("s_(1,1,1) = sigma_1^3 - 2 sigma_1 sigma_2 + sigma_3", got == expect,
         got);
  }
  {
    HomPoly got = derived_schur(make_partition({1}), 3, 1);
    HomPoly expect = make_hompoly(3, 0, {{MultiIndex(3, 0), Rat(3)}});
    push("derived s_(1)^(1) = e", got == expect, got);
  }
  {
    HomPoly got1 = derived_schur(make_partition({1, 1}), 2, 1);
    HomPoly expect1 = scale(elementary_symmetric(1, 2), Rat(3));
    push("derived s_(1,1)^(1) = 3 sigma_1", got1 == expect1, got1);
    HomPoly got2 = derived_schur(make_partition({1, 1}), 2, 2);
    HomPoly expect2 = make_hompoly(2, 0, {{MultiIndex(2, 0), Rat(3)}});
    push("derived s_(1,1)^(2) = 3", got2 == expect2, got2);
  }

  rep["checks"] = std::move(checks);
  rep["ok"] = all;
  return {rep, all ? 0 : 1};
}

std::pair<Json, int> reproduce_md_signature() {
  Json rep;
  rep["command"] = "reproduce";
  rep["name"] = "md-signature";
  rep["expected_violation"] = false;

  RatMatrix I2 = RatMatrix::Identity(2, 2);
  RatMatrix gram2 = md_hodge_form({}, I2, 2);
  Inertia in2 = inertia(gram2);
  RatMatrix expect2(3, 3);
  expect2.setZero();
  expect2(0, 1) = rat(1, 2);
  expect2(1, 0) = rat(1, 2);
  expect2(2, 2) = -1;
  bool gram_ok = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (gram2(i, j) != expect2(i, j)) gram_ok = false;

  RatMatrix I3 = RatMatrix::Identity(3, 3);
  RatMatrix gram3 = md_hodge_form({I3}, I3, 3);
  Inertia in3 = inertia(gram3);

  rep["gram_n2"] = matrix_to_json(gram2);
  rep["gram_n2_matches"] = gram_ok;
  rep["inertia_n2"] = {in2.positive, in2.zero, in2.negative};
  rep["gram_n3"] = matrix_to_json(gram3);
  rep["inertia_n3"] = {in3.positive, in3.zero, in3.negative};

  bool ok = gram_ok && in2 == Inertia{1, 0, 2} && in3 == Inertia{1, 0, 5};
  rep["ok"] = ok;
  return {rep, ok ? 0 : 1};
}

std::pair<Json, int> reproduce_polymatroid_demo() {
  Json rep;
  rep["command"] = "reproduce";
  rep["name"] = "polymatroid-demo";
  rep["expected_violation"] = true;

  std::vector<RatVector> tri = {rat_vector({0, 0, 0}), rat_vector({1, 0, 0}),
                                rat_vector({0, 1, 0})};
  GroundSet good;
  good.bodies = {segment(3, 0), segment(3, 1), Polytope(3, tri)};
  good.m = 2;
  good.W = unit_cube(3);
  RankOracle oracle(good);
  Verdict ok_verdict = check_polymatroid(oracle);
  Json ranks = Json::array();
  for (unsigned mask = 0; mask < (1u << 3); ++mask)
    ranks.push_back(oracle.rank_mask(mask));
  rep["ground"] = verdict_to_json(ok_verdict);
  rep["ranks_by_mask"] = std::move(ranks);

  GroundSet planted = good;
  planted.bodies.push_back(Polytope(3, {rat_vector({1, 1, 1})}));
  RankOracle oracle2(planted);
  Verdict loop_verdict = check_polymatroid(oracle2);
  rep["planted_point"] = verdict_to_json(loop_verdict);

  bool loop_found = !loop_verdict.holds && loop_verdict.witness &&
                    (*loop_verdict.witness)["kind"] == "loop" &&
                    (*loop_verdict.witness)["index"] == 3;
  rep["ok"] = ok_verdict.holds && loop_found;
  return {rep, (ok_verdict.holds && loop_found) ? 0 : 1};
}

}  // namespace

std::pair<Json, int> run_reproduce(const std::string& name) {
  if (name == "huh-example") return reproduce_huh();
  if (name == "bipyramid") return reproduce_bipyramid();
  if (name == "schur-examples") return reproduce_schur_examples();
  if (name == "md-signature") return reproduce_md_signature();
  if (name == "polymatroid-demo") return reproduce_polymatroid_demo();
  throw InputError("unknown reproduction \"" + name +
                   "\" (expected huh-example, bipyramid, schur-examples, "
                   "md-signature, or polymatroid-demo)");
}

// ---------------------------------------------------------------------------
// Command-line front end
// ---------------------------------------------------------------------------

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

int workers_from_env() {
  const char* env = std::getenv("LORCHECK_WORKERS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw InputError("LORCHECK_WORKERS must be a positive integer");
  return static_cast<int>(v);
}

void emit_report(const Json& rep, const std::string& out_path,
                 std::ostream& out) {
  out << rep.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot open output file: " + out_path);
    f << rep.dump(2) << "\n";
  }
}

Sweep parse_sweep_flag(const std::string& text, std::uint64_t seed) {
  if (text == "full") return Sweep::full_sweep();
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string num = text.substr(prefix.size());
    char* end = nullptr;
    long long v = std::strtoll(num.c_str(), &end, 10);
    if (end == num.c_str() || *end != '\0' || v < 1)
      throw InputError("--sweep sample:N needs a positive N");
    return Sweep::sample(v, seed);
  }
  throw InputError("--sweep must be \"full\" or \"sample:N\"");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact verification of Lorentzian-polynomial, mixed-volume, "
               "Schur, mixed-discriminant, and polymatroid inequalities"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string suite;
  std::string repro_name;
  std::string sweep_text;
  std::string dump_path;
  std::uint64_t seed = 0;
  std::int64_t trials = 100;
  std::int64_t budget_ms = 0;

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("input", in_path, "input JSON file")->required();
    sub->add_option("--out", out_path, "also write the report to this file");
    return sub;
  };

  CLI::App* c_lorentzian =
      with_io(app.add_subcommand("check-lorentzian",
                                 "Lorentzian membership of a polynomial"));
  CLI::App* c_rayleigh = with_io(app.add_subcommand(
      "check-rayleigh", "c-Rayleigh inequality sweep at given points"));
  CLI::App* c_rkt = with_io(app.add_subcommand(
      "check-rkt", "reverse Khovanskii-Teissier sweep (mode rkt/rkt-optimal)"));
  CLI::App* c_pr = with_io(
      app.add_subcommand("check-pr", "Pluennecke-Ruzsa inequality on triples"));
  CLI::App* c_supermod = with_io(app.add_subcommand(
      "check-supermod", "higher-order supermodularity on triples"));
  CLI::App* c_af = with_io(app.add_subcommand(
      "check-af-form", "Alexandrov-Fenchel form inequality on tuples"));
  CLI::App* c_mv = with_io(
      app.add_subcommand("mixed-volume", "exact mixed volume of a body multiset"));
  CLI::App* c_vp = with_io(app.add_subcommand(
      "volume-poly", "volume polynomial of a body list"));
  CLI::App* c_schur =
      with_io(app.add_subcommand("schur", "Schur polynomial from a partition"));
  CLI::App* c_dschur = with_io(app.add_subcommand(
      "derived-schur", "derived Schur polynomial s^(i) from a partition"));
  CLI::App* c_md = with_io(app.add_subcommand(
      "mixed-disc", "exact mixed discriminant of symmetric matrices"));
  CLI::App* c_schur_af = with_io(app.add_subcommand(
      "schur-af", "Alexandrov-Fenchel for a Schur-type valuation"));
  CLI::App* c_poly = with_io(app.add_subcommand(
      "polymatroid", "polymatroid axioms for a ground set's rank function"));

  CLI::App* c_fuzz =
      app.add_subcommand("fuzz", "seeded property suite over random instances");
  c_fuzz->add_option("suite", suite, "suite name")->required();
  c_fuzz->add_option("--seed", seed, "deterministic stream seed");
  c_fuzz->add_option("--trials", trials, "number of trials");
  c_fuzz->add_option("--sweep", sweep_text,
                     "splitting policy: full or sample:N (default: automatic)");
  c_fuzz->add_option("--budget-ms", budget_ms,
                     "soft time budget; truncation is recorded in the report");
  c_fuzz->add_option("--out", out_path, "also write the report to this file");
  c_fuzz->add_option("--dump-instances", dump_path,
                     "write the generated instance stream (one JSON object "
                     "per line) to this file");

  CLI::App* c_repro = app.add_subcommand(
      "reproduce", "named reproduction (huh-example, bipyramid, "
                   "schur-examples, md-signature, polymatroid-demo)");
  c_repro->add_option("name", repro_name, "reproduction name")->required();
  c_repro->add_option("--out", out_path, "also write the report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    int workers = workers_from_env();
    (void)workers;  // accepted for interface compatibility; execution is serial

    if (app.got_subcommand(c_lorentzian)) {
      Json j = load_json(in_path);
      HomPoly f = hompoly_from_json(j);
      Verdict v = is_lorentzian(f);
      Json rep;
      rep["command"] = "check-lorentzian";
      rep["input_digest"] = json_digest(j);
      rep["verdict"] = verdict_to_json(v);
      emit_report(rep, out_path, out);
      return v.holds ? 0 : 1;
    }
    if (app.got_subcommand(c_rayleigh)) {
      Json j = load_json(in_path);
      HomPoly f = hompoly_from_json(j.contains("poly") ? j.at("poly") : j);
      if (!j.contains("points") || !j.at("points").is_array() ||
          j.at("points").empty())
        throw InputError("field \"points\" must be a nonempty array");
      std::vector<RatVector> pts;
      for (const Json& p : j.at("points")) pts.push_back(vector_from_json(p));
      Rat c = j.contains("c") ? rat_from_json(j.at("c"))
                              : (f.degree >= 1 ? rayleigh_constant(f.degree)
                                               : Rat(0));
      Verdict v = c_rayleigh_check(f, c, pts);
      Json rep;
      rep["command"] = "check-rayleigh";
      rep["input_digest"] = json_digest(j);
      rep["c"] = rat_to_string(c);
      rep["verdict"] = verdict_to_json(v);
      emit_report(rep, out_path, out);
      return v.holds ? 0 : 1;
    }

    auto ineq_command = [&](const char* cmd, const char* mode_a,
                            const char* mode_b) -> int {
      Json j = load_json(in_path);
      IneqInstance inst = ineq_instance_from_json(j);
      if (inst.mode != mode_a && (mode_b == nullptr || inst.mode != mode_b))
        throw InputError(std::string(cmd) + " does not accept mode \"" +
                         inst.mode + "\"");
      Verdict v;
      if (inst.mode == "rkt")
        v = rkt_check(inst.poly, inst.points, inst.sweep);
      else if (inst.mode == "rkt-optimal")
        v = rkt_optimal_check(inst.poly, inst.points, inst.sweep);
      else if (inst.mode == "pr")
        v = pr_check(inst.poly, inst.triples);
      else if (inst.mode == "supermod")
        v = supermodularity_check(inst.poly, inst.triples);
      else
        v = af_form_check(inst.poly, inst.tuples);
      Json rep;
      rep["command"] = cmd;
      rep["mode"] = inst.mode;
      rep["input_digest"] = json_digest(j);
      rep["verdict"] = verdict_to_json(v);
      emit_report(rep, out_path, out);
      return v.holds ? 0 : 1;
    };

    if (app.got_subcommand(c_rkt))
      return ineq_command("check-rkt", "rkt", "rkt-optimal");
    if (app.got_subcommand(c_pr)) return ineq_command("check-pr", "pr", nullptr);
    if (app.got_subcommand(c_supermod))
      return ineq_command("check-supermod", "supermod", nullptr);
    if (app.got_subcommand(c_af))
      return ineq_command("check-af-form", "af-form", nullptr);

    if (app.got_subcommand(c_mv)) {
      Json j = load_json(in_path);
      MixedVolumeSpec spec = mixed_volume_spec_from_json(j);
      Rat value = mixed_volume(spec);
      Json rep;
      rep["command"] = "mixed-volume";
      rep["input_digest"] = json_digest(j);
      rep["value"] = rat_to_string(value);
      emit_report(rep, out_path, out);
      return 0;
    }
    if (app.got_subcommand(c_vp)) {
      Json j = load_json(in_path);
      if (!j.contains("bodies") || !j.at("bodies").is_array() ||
          j.at("bodies").empty())
        throw InputError("field \"bodies\" must be a nonempty array");
      std::vector<Polytope> bodies;
      for (const Json& b : j.at("bodies"))
        bodies.push_back(polytope_from_json(b));
      HomPoly f = volume_polynomial(bodies);
      Json rep;
      rep["command"] = "volume-poly";
      rep["input_digest"] = json_digest(j);
      rep["poly"] = hompoly_to_json(f);
      emit_report(rep, out_path, out);
      return 0;
    }
    if (app.got_subcommand(c_schur)) {
      Json j = load_json(in_path);
      auto [lambda, e] = partition_from_json(j);
      HomPoly s = schur(lambda, e);
      Json rep;
      rep["command"] = "schur";
      rep["input_digest"] = json_digest(j);
      rep["poly"] = hompoly_to_json(s);
      emit_report(rep, out_path, out);
      return 0;
    }
    if (app.got_subcommand(c_dschur)) {
      Json j = load_json(in_path);
      auto [lambda, e] = partition_from_json(j);
      if (!j.contains("i") || !j.at("i").is_number_integer())
        throw InputError("field \"i\" must be an integer");
      HomPoly s = derived_schur(lambda, e, j.at("i").get<int>());
      Json rep;
      rep["command"] = "derived-schur";
      rep["input_digest"] = json_digest(j);
      rep["poly"] = hompoly_to_json(s);
      emit_report(rep, out_path, out);
      return 0;
    }
    if (app.got_subcommand(c_md)) {
      Json j = load_json(in_path);
      if (!j.contains("matrices") || !j.at("matrices").is_array() ||
          j.at("matrices").empty())
        throw InputError("field \"matrices\" must be a nonempty array");
      std::vector<RatMatrix> mats;
      for (const Json& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
      Rat value = mixed_discriminant(mats);
      Json rep;
      rep["command"] = "mixed-disc";
      rep["input_digest"] = json_digest(j);
      rep["value"] = rat_to_string(value);
      emit_report(rep, out_path, out);
      return 0;
    }
    if (app.got_subcommand(c_schur_af)) {
      Json j = load_json(in_path);
      SchurAfInstance inst = schur_af_instance_from_json(j);
      Verdict v = schur_af_check(inst.spec, inst.M, inst.N);
      Json rep;
      rep["command"] = "schur-af";
      rep["input_digest"] = json_digest(j);
      rep["verdict"] = verdict_to_json(v);
      emit_report(rep, out_path, out);
      return v.holds ? 0 : 1;
    }
    if (app.got_subcommand(c_poly)) {
      Json j = load_json(in_path);
      GroundSet g = ground_set_from_json(j);
      RankOracle oracle(g);
      Verdict v = check_polymatroid(oracle);
      Json ranks = Json::array();
      for (unsigned mask = 0; mask < (1u << g.bodies.size()); ++mask)
        ranks.push_back(oracle.rank_mask(mask));
      Json rep;
      rep["command"] = "polymatroid";
      rep["input_digest"] = json_digest(j);
      rep["ranks_by_mask"] = std::move(ranks);
      rep["verdict"] = verdict_to_json(v);
      emit_report(rep, out_path, out);
      return v.holds ? 0 : 1;
    }
    if (app.got_subcommand(c_fuzz)) {
      FuzzOptions opts;
      opts.suite = suite;
      opts.seed = seed;
      opts.trials = trials;
      opts.budget_ms = budget_ms;
      opts.dump_path = dump_path;
      if (!sweep_text.empty()) {
        opts.sweep_override = true;
        opts.sweep = parse_sweep_flag(sweep_text, seed);
      }
      Json rep = run_fuzz_suite(opts);
      emit_report(rep, out_path, out);
      return rep["violations"].get<std::int64_t>() == 0 ? 0 : 1;
    }
    if (app.got_subcommand(c_repro)) {
      auto [rep, code] = run_reproduce(repro_name);
      emit_report(rep, out_path, out);
      return code;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command dispatched\n";
  return 2;
}

}  // namespace lorcheck
