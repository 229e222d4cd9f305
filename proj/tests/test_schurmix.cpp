#include <doctest.h>

#include <map>

#include "lorcheck/inertia.hpp"
#include "lorcheck/mixed_discriminant.hpp"
#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/schur.hpp"
#include "lorcheck/schur_valuation.hpp"

using namespace lorcheck;

namespace {

// Independent oracle: the combinatorial expansion of the Schur polynomial of
// shape mu as a sum over semistandard tableaux (rows weakly increasing,
// columns strictly increasing, entries in 1..e). The determinant under test
// equals the tableau sum for the conjugate shape.
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

void partitions_up_to(int max_weight, int max_part,
                      std::vector<int>& current, std::vector<Partition>& out) {
  out.push_back(make_partition(current));
  int used = 0;
  for (int p : current) used += p;
  int cap = current.empty() ? max_part : current.back();
  for (int next = 1; next <= cap && used + next <= max_weight; ++next) {
    current.push_back(next);
    partitions_up_to(max_weight, max_part, current, out);
    current.pop_back();
  }
}

std::vector<Partition> all_partitions(int max_weight, int max_part) {
  std::vector<int> current;
  std::vector<Partition> out;
  partitions_up_to(max_weight, max_part, current, out);
  return out;
}

RatMatrix mat2(long a, long b, long c, long d) {
  RatMatrix m(2, 2);
  m << Rat(a), Rat(b), Rat(c), Rat(d);
  return m;
}

}  // namespace

TEST_CASE("partition construction") {
  Partition p = make_partition({3, 1, 0, 0});
  CHECK(p.parts == std::vector<int>{3, 1});
  CHECK(partition_weight(p) == 4);
  CHECK(partition_weight(make_partition({})) == 0);
  CHECK_THROWS_AS(make_partition({1, 2}), InputError);
  CHECK_THROWS_AS(make_partition({2, -1}), InputError);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(make_partition({3, 1})).parts == std::vector<int>{2, 1, 1});
  CHECK(conjugate(make_partition({2, 2})).parts == std::vector<int>{2, 2});
  CHECK(conjugate(make_partition({})).parts.empty());
  CHECK(conjugate(conjugate(make_partition({4, 2, 1}))).parts ==
        std::vector<int>{4, 2, 1});
}

TEST_CASE("elementary symmetric polynomials") {
  HomPoly s2 = elementary_symmetric(2, 3);
  CHECK(s2 == make_hompoly(3, 2, {{{1, 1, 0}, Rat(1)},
                                  {{1, 0, 1}, Rat(1)},
                                  {{0, 1, 1}, Rat(1)}}));
  CHECK(elementary_symmetric(0, 2) ==
        make_hompoly(2, 0, {{{0, 0}, Rat(1)}}));
  CHECK(elementary_symmetric(3, 2).is_zero());
  CHECK(elementary_symmetric(-1, 2).is_zero());
  CHECK(elementary_symmetric(4, 4) == make_hompoly(4, 4, {{{1, 1, 1, 1}, Rat(1)}}));
}

TEST_CASE("frozen Schur determinant identities") {
  CHECK(schur(make_partition({2}), 3) == elementary_symmetric(2, 3));
  HomPoly s1 = elementary_symmetric(1, 2);
  CHECK(schur(make_partition({1, 1}), 2) ==
        add(mul(s1, s1), scale(elementary_symmetric(2, 2), Rat(-1))));
  CHECK(schur(make_partition({1, 1}), 2) ==
        make_hompoly(2, 2, {{{2, 0}, Rat(1)}, {{1, 1}, Rat(1)},
                            {{0, 2}, Rat(1)}}));
  CHECK(schur(make_partition({2, 1}), 3) ==
        add(mul(elementary_symmetric(1, 3), elementary_symmetric(2, 3)),
            scale(elementary_symmetric(3, 3), Rat(-1))));
  HomPoly t1 = elementary_symmetric(1, 3);
  CHECK(schur(make_partition({1, 1, 1}), 3) ==
        add(add(mul(t1, mul(t1, t1)),
                scale(mul(t1, elementary_symmetric(2, 3)), Rat(-2))),
            elementary_symmetric(3, 3)));
  CHECK(schur(make_partition({}), 2) ==
        make_hompoly(2, 0, {{{0, 0}, Rat(1)}}));
  CHECK_THROWS_AS(schur(make_partition({3}), 2), InputError);
}

TEST_CASE("Schur determinant matches the tableau oracle") {
  for (int e = 1; e <= 3; ++e) {
    for (const Partition& lambda : all_partitions(5, e)) {
      HomPoly got = schur(lambda, e);
      HomPoly expect = schur_tableau_oracle(lambda, e);
      CHECK(got == expect);
      CHECK(has_nonnegative_coefficients(got));
    }
  }
}

TEST_CASE("derived Schur polynomials") {
  CHECK(derived_schur(make_partition({2, 1}), 3, 0) ==
        schur(make_partition({2, 1}), 3));
  CHECK(derived_schur(make_partition({1}), 3, 1) ==
        make_hompoly(3, 0, {{{0, 0, 0}, Rat(3)}}));
  CHECK(derived_schur(make_partition({1, 1}), 2, 1) ==
        scale(elementary_symmetric(1, 2), Rat(3)));
  CHECK(derived_schur(make_partition({1, 1}), 2, 2) ==
        make_hompoly(2, 0, {{{0, 0}, Rat(3)}}));
  CHECK_THROWS_AS(derived_schur(make_partition({1, 1}), 2, 3), InputError);
  CHECK_THROWS_AS(derived_schur(make_partition({1, 1}), 2, -1), InputError);
}

TEST_CASE("derived Schur is the Taylor expansion along the diagonal shift") {
  // sum_i s^(i)(x) t^i = s(x + t*1) at rational sample values.
  std::vector<std::pair<Partition, int>> cases = {
      {make_partition({2, 1}), 3},
      {make_partition({2, 2}), 2},
      {make_partition({3, 1}), 4}};
  for (const auto& [lambda, e] : cases) {
    int w = partition_weight(lambda);
    RatVector x(e);
    for (int i = 0; i < e; ++i) x(i) = rat(i + 1, 2);
    for (Rat t : {rat(1, 3), Rat(2), Rat(-1)}) {
      Rat direct = evaluate(schur(lambda, e),
                            (x.array() + t).matrix().eval());
      Rat series = 0;
      Rat tpow = 1;
      for (int i = 0; i <= w; ++i) {
        series += tpow * evaluate(derived_schur(lambda, e, i), x);
        tpow *= t;
      }
      CHECK(direct == series);
    }
  }
}

TEST_CASE("derived Schur keeps nonnegative coefficients") {
  for (int e = 1; e <= 3; ++e)
    for (const Partition& lambda : all_partitions(4, e))
      for (int i = 0; i <= partition_weight(lambda); ++i)
        CHECK(has_nonnegative_coefficients(derived_schur(lambda, e, i)));
}

TEST_CASE("mixed discriminant frozen values") {
  RatMatrix a1(1, 1);
  a1(0, 0) = 7;
  CHECK(mixed_discriminant({a1}) == 7);

  RatMatrix i2 = RatMatrix::Identity(2, 2);
  CHECK(mixed_discriminant({i2, i2}) == 1);
  RatMatrix e11 = mat2(1, 0, 0, 0);
  RatMatrix e22 = mat2(0, 0, 0, 1);
  CHECK(mixed_discriminant({e11, e22}) == rat(1, 2));
  CHECK(mixed_discriminant({e11, e11}) == 0);
  CHECK(mixed_discriminant({mat2(1, 0, 0, 2), mat2(3, 0, 0, 4)}) == 5);

  RatMatrix a = mat2(2, 1, 1, 3);
  CHECK(mixed_discriminant({a, a}) == 5);  // det A

  RatMatrix i3 = RatMatrix::Identity(3, 3);
  CHECK(mixed_discriminant({i3, i3, i3}) == 1);
  RatMatrix d1 = RatMatrix::Zero(3, 3), d2 = RatMatrix::Zero(3, 3),
            d3 = RatMatrix::Zero(3, 3);
  d1(0, 0) = 1; d2(1, 1) = 1; d3(2, 2) = 1;
  CHECK(mixed_discriminant({d1, d2, d3}) == rat(1, 6));

  // Diagonal matrices: the permanent of the coefficient rows over 3!.
  RatMatrix da = RatMatrix::Zero(3, 3), db = RatMatrix::Zero(3, 3),
            dc = RatMatrix::Zero(3, 3);
  da(0, 0) = 1; da(1, 1) = 2; da(2, 2) = 3;
  db(0, 0) = 1; db(1, 1) = 1; db(2, 2) = 1;
  dc(0, 0) = 1; dc(1, 1) = 0; dc(2, 2) = 1;
  CHECK(mixed_discriminant({da, db, dc}) == rat(4, 3));
}

TEST_CASE("mixed discriminant is multilinear and validates input") {
  RatMatrix a = mat2(2, 1, 1, 1);
  RatMatrix b = mat2(1, 0, 0, 3);
  RatMatrix c = mat2(1, 2, 2, 1);
  CHECK(mixed_discriminant({a + b, c}) ==
        mixed_discriminant({a, c}) + mixed_discriminant({b, c}));
  CHECK_THROWS_AS(mixed_discriminant({mat2(1, 2, 3, 4), mat2(1, 0, 0, 1)}),
                  InputError);
  CHECK_THROWS_AS(mixed_discriminant({a}), InputError);
  CHECK_THROWS_AS(mixed_discriminant(std::vector<RatMatrix>{}), InputError);
}

TEST_CASE("symmetric-matrix basis ordering") {
  auto b2 = sym_matrix_basis(2);
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == mat2(1, 0, 0, 0));
  CHECK(b2[1] == mat2(0, 0, 0, 1));
  CHECK(b2[2] == mat2(0, 1, 1, 0));
  CHECK(sym_matrix_basis(3).size() == 6);
  CHECK(sym_matrix_basis(4).size() == 10);
}

TEST_CASE("Hodge-type Gram matrix and its signature") {
  RatMatrix i2 = RatMatrix::Identity(2, 2);
  RatMatrix gram = md_hodge_form({}, i2, 2);
  RatMatrix expect = RatMatrix::Zero(3, 3);
  expect(0, 1) = rat(1, 2);
  expect(1, 0) = rat(1, 2);
  expect(2, 2) = -1;
  CHECK(gram == expect);
  CHECK(inertia(gram) == Inertia{1, 0, 2});

  RatMatrix i3 = RatMatrix::Identity(3, 3);
  CHECK(inertia(md_hodge_form({i3}, i3, 3)) == Inertia{1, 0, 5});
  CHECK(inertia(md_hodge_form({}, i3, 2)) == Inertia{1, 0, 5});

  CHECK_THROWS_AS(md_hodge_form({}, i2, 3), InputError);
  CHECK_THROWS_AS(md_hodge_form({}, mat2(1, 0, 0, -1), 2), InputError);
  CHECK_THROWS_AS(md_hodge_form({mat2(0, 0, 0, 0)}, i2, 2), InputError);
}

TEST_CASE("mixed-discriminant form inequality") {
  RatMatrix i2 = RatMatrix::Identity(2, 2);
  Verdict v = md_af_check(i2, mat2(1, 0, 0, -1), {}, i2, 2);
  CHECK(v.holds);
  CHECK(*v.margin == 1);  // 0^2 - (1)(-1)
  Verdict eq = md_af_check(i2, i2, {}, i2, 2);
  CHECK(eq.holds);
  CHECK(*eq.margin == 0);

  RatMatrix i3 = RatMatrix::Identity(3, 3);
  RatMatrix b3(3, 3);
  b3 << Rat(1), Rat(2), Rat(0),
        Rat(2), Rat(-1), Rat(1),
        Rat(0), Rat(1), Rat(3);
  CHECK(md_af_check(i3, b3, {i3}, i3, 3).holds);

  CHECK_THROWS_AS(md_af_check(i3, mat2(1, 0, 0, -1), {i3}, i3, 3), InputError);
  CHECK_THROWS_AS(md_af_check(mat2(1, 0, 0, -1), i2, {}, i2, 2), InputError);
}

TEST_CASE("Schur-type valuation reduces to plain mixed volumes") {
  SchurValuationSpec spec;
  spec.tuples.push_back({make_partition({1}), {unit_cube(3)}});
  Polytope m = segment(3, 0), n = segment(3, 1);
  CHECK(schur_valuation(spec, m, n) == rat(1, 6));  // V(cube, e1, e2)
  Verdict v = schur_af_check(spec, m, n);
  CHECK(v.holds);
  CHECK(*v.margin == rat(1, 36));  // (1/6)^2 - 0*0
  Verdict eq = schur_af_check(spec, m, m);
  CHECK(eq.holds);
  CHECK(*eq.margin == 0);
}

TEST_CASE("two-factor Schur valuation in dimension four") {
  SchurValuationSpec spec;
  spec.tuples.push_back({make_partition({1}), {segment(4, 0)}});
  spec.tuples.push_back({make_partition({1}), {segment(4, 1)}});
  Polytope m = segment(4, 2), n = segment(4, 3);
  CHECK(schur_valuation(spec, m, n) == rat(1, 24));
  Verdict v = schur_af_check(spec, m, n);
  CHECK(v.holds);
  CHECK(*v.margin == rat(1, 576));
}

TEST_CASE("width-two Schur factor expands into the right mixed volumes") {
  // s_(1,1)(x1, x2) = x1^2 + x1 x2 + x2^2 over bodies (K1, K2):
  // Theta(M,N) = V(K1,K1,M,N) + V(K1,K2,M,N) + V(K2,K2,M,N).
  Polytope k1 = unit_cube(4);
  Polytope k2 = standard_simplex(4);
  Polytope m = segment(4, 0), n = segment(4, 1);
  SchurValuationSpec spec;
  spec.tuples.push_back({make_partition({1, 1}), {k1, k2}});
  BodySystem sys(4, {k1, k2, m, n});
  Rat expect = sys.mixed({2, 0, 1, 1}) + sys.mixed({1, 1, 1, 1}) +
               sys.mixed({0, 2, 1, 1});
  CHECK(schur_valuation(spec, m, n) == expect);
  CHECK(schur_af_check(spec, m, n).holds);
}

TEST_CASE("Schur valuation validates weights and arity") {
  SchurValuationSpec bad_weight;
  bad_weight.tuples.push_back({make_partition({1, 1}), {unit_cube(3)}});
  // |lambda| = 2 != n - 2 = 1: rejected -- but width 2 > one body fails first.
  CHECK_THROWS_AS(
      schur_af_check(bad_weight, segment(3, 0), segment(3, 1)), InputError);

  SchurValuationSpec wrong_sum;
  wrong_sum.tuples.push_back({make_partition({2}), {unit_cube(4), unit_cube(4)}});
  // |lambda| = 2 != 4 - 2 = 2 holds; make it fail with weight 3.
  wrong_sum.tuples[0].lambda = make_partition({2, 1});
  CHECK_THROWS_AS(
      schur_af_check(wrong_sum, segment(4, 0), segment(4, 1)), InputError);

  SchurValuationSpec ambient;
  ambient.tuples.push_back({make_partition({1}), {unit_cube(2)}});
  CHECK_THROWS_AS(schur_af_check(ambient, segment(3, 0), segment(3, 1)),
                  InputError);
}
