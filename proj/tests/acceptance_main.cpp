// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion enforces both its mathematical claim and its time budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lorcheck/cli.hpp"
#include "lorcheck/fuzz.hpp"
#include "lorcheck/lorentzian.hpp"
#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/numerical_dim.hpp"
#include "lorcheck/schur.hpp"

using namespace lorcheck;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome pass_with(const std::string& d) { return {true, d}; }
Outcome fail_with(const std::string& d) { return {false, d}; }

std::string fuzz_summary(const Json& rep) {
  std::ostringstream s;
  s << rep["trials_completed"].get<std::int64_t>() << " trials, "
    << rep["checked"].get<std::int64_t>() << " checks, "
    << rep["violations"].get<std::int64_t>() << " violations";
  if (!rep["first_violation"].is_null())
    s << "; first: " << rep["first_violation"].dump();
  return s.str();
}

Outcome run_suite_criterion(const std::string& suite, std::int64_t trials,
                            std::uint64_t seed) {
  FuzzOptions opts;
  opts.suite = suite;
  opts.seed = seed;
  opts.trials = trials;
  Json rep = run_fuzz_suite(opts);
  bool ok = rep["violations"].get<std::int64_t>() == 0 &&
            rep["trials_completed"].get<std::int64_t>() == trials;
  return {ok, fuzz_summary(rep)};
}

// --- criterion 1: the degree-3 Lorentzian counterexample -------------------

Outcome degree3_counterexample() {
  auto [rep, code] = run_reproduce("huh-example");
  if (code != 0) return fail_with("reproduction failed: " + rep.dump());
  return pass_with("Lorentzian holds, constant-1 form fails, 2^{kl} form holds");
}

// --- criterion 2: bipyramid exact values -----------------------------------

Outcome bipyramid_exact() {
  auto [rep, code] = run_reproduce("bipyramid");
  if (code != 0) return fail_with("reproduction failed: " + rep.dump());
  std::ostringstream s;
  s << "vol " << rep["vol_B"].get<std::string>() << ", products "
    << rep["lhs"].get<std::string>() << " vs "
    << rep["rhs_c1"].get<std::string>() << " / "
    << rep["rhs_sharpened"].get<std::string>() << " (sharpened equality)";
  return pass_with(s.str());
}

// --- criteria 3, 4, 6, 7, 9, 10: fuzz corpora ------------------------------

Outcome rkt_corpus() { return run_suite_criterion("rkt", 1000, 20260823); }
Outcome pr_supermod_corpus() {
  return run_suite_criterion("pr-supermod", 1000, 20260823);
}
Outcome volume_poly_corpus() {
  return run_suite_criterion("volume-poly", 100, 20260823);
}
Outcome convex_rkt_corpus() {
  return run_suite_criterion("convex-rkt", 200, 20260823);
}
Outcome schur_af_corpus() {
  return run_suite_criterion("schur-af", 100, 20260823);
}
Outcome md_hodge_corpus() {
  return run_suite_criterion("md-hodge", 50, 20260823);
}

// --- criterion 5: mixed-volume identities ----------------------------------

Outcome mixed_volume_identities() {
  BodySystem segs(3, {segment(3, 0), segment(3, 1), segment(3, 2)});
  if (segs.mixed({1, 1, 1}) != rat(1, 6))
    return fail_with("V([0,e1],[0,e2],[0,e3]) != 1/6");

  Polytope tri(2, {rat_vector({0, 0}), rat_vector({2, 1}), rat_vector({1, 3})});
  if (volume(minkowski_sum(tri, tri)) != 4 * volume(tri))
    return fail_with("vol(K+K) != 4 vol(K) for the frozen triangle");

  fuzz::Rng root(20260823);
  int symmetry = 0, multilinearity = 0, reduction = 0;
  for (int t = 0; t < 100; ++t) {
    fuzz::Rng rng = root.fork(static_cast<std::uint64_t>(t));
    const int n = rng.chance(1, 2) ? 2 : 3;
    std::vector<Polytope> bodies;
    for (int i = 0; i < 3; ++i)
      bodies.push_back(fuzz::polytope(rng, n, 4, 2, 2));

    // Symmetry: evaluating through a reordered body list must agree.
    std::vector<int> counts(3, 0);
    for (int i = 0; i < n; ++i) ++counts[rng.uniform(0, 2)];
    BodySystem forward(n, bodies);
    BodySystem reversed(n, {bodies[2], bodies[1], bodies[0]});
    if (forward.mixed(counts) !=
        reversed.mixed({counts[2], counts[1], counts[0]}))
      return fail_with("symmetry mismatch at trial " + std::to_string(t));
    ++symmetry;

    // Multilinearity in the first argument.
    BodySystem wide(n, {bodies[0], bodies[1], bodies[2],
                        minkowski_sum(bodies[0], bodies[1])});
    std::vector<int> rest{3};
    std::vector<int> left{0}, right{1};
    for (int i = 0; i + 1 < n; ++i) {
      rest.push_back(2);
      left.push_back(2);
      right.push_back(2);
    }
    if (wide.mixed_indices(rest) !=
        wide.mixed_indices(left) + wide.mixed_indices(right))
      return fail_with("multilinearity mismatch at trial " + std::to_string(t));
    ++multilinearity;

    if (t % 2 == 0) {
      int axis = static_cast<int>(rng.uniform(0, n - 1));
      BodySystem red(n, {bodies[0], segment(n, axis)});
      std::vector<int> c{n - 1, 1};
      if (red.mixed(c) != volume(project_drop(bodies[0], {axis})) / Rat(n))
        return fail_with("reduction mismatch at trial " + std::to_string(t));
      ++reduction;
    }

    if (n == 2 &&
        volume(minkowski_sum(bodies[0], bodies[0])) != 4 * volume(bodies[0]))
      return fail_with("dilation mismatch at trial " + std::to_string(t));
  }
  std::ostringstream s;
  s << symmetry << " symmetry, " << multilinearity << " multilinearity, "
    << reduction << " reduction instances verified";
  return pass_with(s.str());
}

// --- criterion 8: Schur nonnegativity and the tableau oracle ---------------

void ssyt_fill(const std::vector<int>& mu, int e, int r, int c,
               std::vector<std::vector<int>>& cells,
               std::map<MultiIndex, Rat>& acc) {
  if (r == static_cast<int>(mu.size())) {
    MultiIndex exp(e, 0);
    for (const auto& row : cells)
      for (int v : row) ++exp[v - 1];
    acc[exp] += 1;
    return;
  }
  if (c == mu[r]) {
    ssyt_fill(mu, e, r + 1, 0, cells, acc);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, cells[r][c - 1]);
  if (r > 0) lo = std::max(lo, cells[r - 1][c] + 1);
  for (int v = lo; v <= e; ++v) {
    cells[r][c] = v;
    ssyt_fill(mu, e, r, c + 1, cells, acc);
  }
}

HomPoly schur_tableau_oracle(const Partition& lambda, int e) {
  Partition mu = conjugate(lambda);
  std::vector<std::vector<int>> cells;
  for (int p : mu.parts) cells.emplace_back(p, 0);
  std::map<MultiIndex, Rat> acc;
  ssyt_fill(mu.parts, e, 0, 0, cells, acc);
  std::vector<std::pair<MultiIndex, Rat>> terms(acc.begin(), acc.end());
  return make_hompoly(e, partition_weight(lambda), terms);
}

void enumerate_partitions(int max_weight, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
  out.push_back(make_partition(cur));
  int used = 0;
  for (int p : cur) used += p;
  int cap = cur.empty() ? max_part : cur.back();
  for (int next = 1; next <= cap && used + next <= max_weight; ++next) {
    cur.push_back(next);
    enumerate_partitions(max_weight, max_part, cur, out);
    cur.pop_back();
  }
}

Outcome schur_oracle_criterion() {
  auto [rep, code] = run_reproduce("schur-examples");
  if (code != 0) return fail_with("frozen identities failed: " + rep.dump());
  int checked = 0, derived = 0;
  for (int e = 1; e <= 4; ++e) {
    std::vector<int> cur;
    std::vector<Partition> all;
    enumerate_partitions(6, e, cur, all);
    for (const Partition& lambda : all) {
      HomPoly s = schur(lambda, e);
      if (!(s == schur_tableau_oracle(lambda, e)))
        return fail_with("determinant/tableau mismatch at e=" +
                         std::to_string(e));
      if (!has_nonnegative_coefficients(s))
        return fail_with("negative coefficient in a Schur polynomial");
      ++checked;
      for (int i = 0; i <= partition_weight(lambda); ++i) {
        if (!has_nonnegative_coefficients(derived_schur(lambda, e, i)))
          return fail_with("negative coefficient in a derived Schur polynomial");
        ++derived;
      }
    }
  }
  std::ostringstream out;
  out << checked << " Schur polynomials matched the tableau oracle, "
      << derived << " derived polynomials nonnegative";
  return pass_with(out.str());
}

// --- criterion 11: polymatroid verification --------------------------------

Outcome polymatroid_criterion() {
  Outcome fuzzed = run_suite_criterion("polymatroid", 100, 20260823);
  if (!fuzzed.pass) return fuzzed;
  auto [rep, code] = run_reproduce("polymatroid-demo");
  if (code != 0)
    return fail_with("planted-loop reproduction failed: " + rep.dump());
  return pass_with(fuzzed.detail + "; planted point flagged as a loop");
}

// --- criterion 12: determinism ---------------------------------------------

Outcome determinism_criterion() {
  struct Case {
    const char* suite;
    std::int64_t trials;
    std::uint64_t seed;
  };
  for (const Case& c : {Case{"rkt", 20, 7}, Case{"schur-af", 5, 3},
                        Case{"polymatroid", 10, 9}}) {
    FuzzOptions opts;
    opts.suite = c.suite;
    opts.seed = c.seed;
    opts.trials = c.trials;
    Json a = run_fuzz_suite(opts);
    Json b = run_fuzz_suite(opts);
    a.erase("timing");
    b.erase("timing");
    if (a.dump() != b.dump())
      return fail_with(std::string("suite ") + c.suite +
                       " not byte-identical across runs");
  }
  for (const char* name : {"huh-example", "md-signature"}) {
    Json a = run_reproduce(name).first;
    Json b = run_reproduce(name).first;
    if (a.dump() != b.dump())
      return fail_with(std::string("reproduction ") + name +
                       " not byte-identical across runs");
  }
  return pass_with("3 suites and 2 reproductions byte-identical modulo timing");
}

struct Criterion {
  const char* name;
  std::int64_t budget_ms;
  std::function<Outcome()> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"degree-3-counterexample", 1000, degree3_counterexample},
      {"bipyramid-exact-values", 1000, bipyramid_exact},
      {"rkt-corpus-1000", 180000, rkt_corpus},
      {"pr-supermod-corpus-1000", 60000, pr_supermod_corpus},
      {"mixed-volume-identities", 60000, mixed_volume_identities},
      {"volume-poly-lorentzian-100", 120000, volume_poly_corpus},
      {"convex-rkt-corpus-200", 120000, convex_rkt_corpus},
      {"schur-nonneg-oracle", 30000, schur_oracle_criterion},
      {"schur-af-corpus-100", 180000, schur_af_corpus},
      {"md-hodge-signature-50", 60000, md_hodge_corpus},
      {"polymatroid-verification-100", 120000, polymatroid_criterion},
      {"determinism", 120000, determinism_criterion},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    Clock::time_point start = Clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out = fail_with(std::string("exception: ") + e.what());
    }
    std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
    bool in_budget = ms <= c.budget_ms;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "/12] "
              << c.name << "  (" << ms << " ms";
    if (!in_budget) std::cout << " > budget " << c.budget_ms << " ms";
    std::cout << ")";
    if (!out.detail.empty()) std::cout << "  " << out.detail;
    std::cout << "\n" << std::flush;
  }
  if (failures == 0)
    std::cout << "all 12 acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria failed\n";
  return failures == 0 ? 0 : 1;
}
