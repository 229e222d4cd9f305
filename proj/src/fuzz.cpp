#include "lorcheck/fuzz.hpp"

#include <limits>

namespace lorcheck {
namespace fuzz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty uniform range");
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next_u64());  // full span
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t zone = max - max % range;
  std::uint64_t u;
  do {
    u = next_u64();
  } while (u >= zone);
  return lo + static_cast<std::int64_t>(u % range);
}

bool Rng::chance(int num, int den) { return uniform(1, den) <= num; }

Rng Rng::fork(std::uint64_t stream) const {
  Rng copy = *this;
  std::uint64_t base = copy.next_u64();
  return Rng(splitmix64(base ^ splitmix64(stream + 1)));
}

Rat Rng::rational(long max_abs_num, long max_den) {
  long den = uniform(1, max_den);
  long num = uniform(-max_abs_num * den, max_abs_num * den);
  return rat(num, den);
}

Rat Rng::nonneg_rational(long max_num, long max_den) {
  long den = uniform(1, max_den);
  long num = uniform(0, max_num * den);
  return rat(num, den);
}

HomPoly linear_form_product(Rng& rng, int nvars, int degree) {
  if (nvars < 1 || degree < 1) throw InputError("need nvars, degree >= 1");
  HomPoly acc = make_hompoly(nvars, 0, {{MultiIndex(nvars, 0), Rat(1)}});
  for (int k = 0; k < degree; ++k) {
    std::vector<std::pair<MultiIndex, Rat>> terms;
    bool nonzero = false;
    while (!nonzero) {
      terms.clear();
      for (int i = 0; i < nvars; ++i) {
        long c = rng.uniform(0, 3);
        if (c > 0) {
          terms.emplace_back(mi_unit(nvars, i), Rat(c));
          nonzero = true;
        }
      }
    }
    acc = mul(acc, make_hompoly(nvars, 1, terms));
  }
  return acc;
}

RatVector nonneg_point(Rng& rng, int nvars, long max_num, long max_den) {
  RatVector x(nvars);
  for (int i = 0; i < nvars; ++i) x(i) = rng.nonneg_rational(max_num, max_den);
  return x;
}

RatVector any_point(Rng& rng, int nvars, long max_abs, long max_den) {
  RatVector x(nvars);
  for (int i = 0; i < nvars; ++i) x(i) = rng.rational(max_abs, max_den);
  return x;
}

Polytope polytope(Rng& rng, int dim, int max_verts, long coord_range,
                  long max_den) {
  int nverts = static_cast<int>(rng.uniform(1, max_verts));
  std::vector<RatVector> pts;
  pts.reserve(nverts);
  for (int v = 0; v < nverts; ++v) {
    RatVector p(dim);
    for (int j = 0; j < dim; ++j) {
      long den = rng.uniform(1, max_den);
      long num = rng.uniform(-coord_range * den, coord_range * den);
      p(j) = rat(num, den);
    }
    pts.push_back(std::move(p));
  }
  return Polytope(dim, std::move(pts));
}

Polytope nonpoint_lattice_polytope(Rng& rng, int dim, int max_verts,
                                   long coord_range) {
  while (true) {
    int nverts = static_cast<int>(rng.uniform(2, max_verts));
    std::vector<RatVector> pts;
    pts.reserve(nverts);
    for (int v = 0; v < nverts; ++v) {
      RatVector p(dim);
      for (int j = 0; j < dim; ++j) p(j) = Rat(rng.uniform(0, coord_range));
      pts.push_back(std::move(p));
    }
    Polytope cand(dim, std::move(pts));
    if (cand.affine_dim() >= 1) return cand;
  }
}

RatMatrix pd_matrix(Rng& rng, int n, long range) {
  RatMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = Rat(rng.uniform(-range, range));
  RatMatrix a = b.transpose() * b;
  for (int i = 0; i < n; ++i) a(i, i) += 1;
  return a;
}

RatMatrix sym_matrix(Rng& rng, int n, long range) {
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat v(rng.uniform(-range, range));
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

Partition partition(Rng& rng, int weight, int width) {
  if (weight < 0 || width < 1) throw InputError("bad partition parameters");
  std::vector<int> parts;
  int remaining = weight;
  int cap = width;
  while (remaining > 0) {
    int part = static_cast<int>(rng.uniform(1, std::min(cap, remaining)));
    parts.push_back(part);
    cap = part;
    remaining -= part;
  }
  return make_partition(std::move(parts));
}

SchurValuationSpec schur_spec(Rng& rng, int n) {
  const int total = n - 2;
  SchurValuationSpec spec;
  int first = total;
  if (total >= 1 && rng.chance(1, 2))
    first = static_cast<int>(rng.uniform(0, total));
  for (int w : {first, total - first}) {
    if (w == 0 && !spec.tuples.empty()) continue;
    SchurTuple tuple;
    int width = static_cast<int>(rng.uniform(1, 2));
    tuple.lambda = partition(rng, w, width);
    int e = std::max(width, 1);
    for (int i = 0; i < e; ++i)
      tuple.bodies.push_back(polytope(rng, n, 4, 2, 2));
    spec.tuples.push_back(std::move(tuple));
  }
  return spec;
}

GroundSet ground_set(Rng& rng, int max_bodies, int max_dim) {
  GroundSet g;
  int n = static_cast<int>(rng.uniform(2, max_dim));
  int s = static_cast<int>(rng.uniform(1, max_bodies));
  for (int i = 0; i < s; ++i)
    g.bodies.push_back(nonpoint_lattice_polytope(rng, n, 4, 2));
  g.m = static_cast<int>(rng.uniform(1, n));
  g.W = standard_simplex(n);
  return g;
}

}  // namespace fuzz
}  // namespace lorcheck
