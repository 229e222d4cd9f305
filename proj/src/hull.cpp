#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "lorcheck/inertia.hpp"
#include "lorcheck/polytope.hpp"

// Exact incremental convex hull in dimension 2..5.
//
// Degeneracies (coplanar points, sliver facets) are resolved by symbolic
// perturbation: point g is moved to p_g + eps^{2^g} * (t, t^2, ..., t^r) with
// t = g + 1. Orientation determinants become polynomials in eps whose terms
// are indexed by subsets of perturbed rows with pairwise distinct exponent
// sums, so the sign at infinitesimal eps > 0 is the sign of the first nonzero
// subset determinant in exponent order. The predicate is total: it never
// returns 0 for distinct points, which keeps every incremental step in the
// textbook generic-position regime. Unperturbed facet data (normal, offset)
// is the eps^0 coefficient, so true supporting hyperplanes and exact volumes
// drop out unchanged: sliver facets have zero normal and contribute nothing.

namespace lorcheck {
namespace hull {
namespace {

struct Ctx {
  const std::vector<RatVector>* pts;
  int r;
};

RatVector moment_coeff(int g, int r) {
  RatVector c(r);
  Rat t(g + 1);
  Rat acc = 1;
  for (int j = 0; j < r; ++j) {
    acc *= t;
    c(j) = acc;
  }
  return c;
}

// Row in homogeneous coordinates: (1, p) for a real point, with index >= 0
// marking a perturbed input point and -1 an unperturbed auxiliary point.
struct Row {
  int idx;
  RatVector coords;
};

int sos_sign(std::vector<Row> rows, int r) {
  // Sort perturbed rows by global index so that enumerating local bitmasks in
  // numeric order enumerates eps exponents in increasing order.
  int parity = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto key = [](const Row& w) {
        return w.idx < 0 ? std::numeric_limits<int>::max() : w.idx;
      };
      if (key(rows[j]) < key(rows[i])) {
        std::swap(rows[i], rows[j]);
        parity = -parity;
      }
    }
  std::vector<int> perturbed;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].idx >= 0) perturbed.push_back(static_cast<int>(i));
  const int n = static_cast<int>(rows.size());
  RatMatrix m(n, n);
  for (unsigned mask = 0; mask < (1u << perturbed.size()); ++mask) {
    for (int i = 0; i < n; ++i) {
      bool replaced = false;
      for (std::size_t b = 0; b < perturbed.size(); ++b)
        if ((mask & (1u << b)) && perturbed[b] == i) replaced = true;
      if (replaced) {
        RatVector c = moment_coeff(rows[i].idx, r);
        m(i, 0) = 0;
        for (int j = 0; j < r; ++j) m(i, j + 1) = c(j);
      } else {
        m(i, 0) = 1;
        for (int j = 0; j < r; ++j) m(i, j + 1) = rows[i].coords(j);
      }
    }
    Rat d = m.determinant();
    if (d != 0) return (d > 0 ? 1 : -1) * parity;
  }
  throw std::logic_error("symbolic perturbation predicate degenerated");
}

struct Facet {
  std::vector<int> vs;  // r point indices in orientation order
  RatVector normal;     // eps^0 hyperplane; zero vector for slivers
  Rat offset;
  bool alive = true;
};

// True-coordinate linear form of det[[1,v1],...,[1,vr],[1,x]] as a function
// of x, via cofactors along the x row.
void facet_plane(const Ctx& ctx, const std::vector<int>& vs, RatVector* normal,
                 Rat* offset) {
  const int r = ctx.r;
  RatMatrix base(r, r + 1);
  for (int i = 0; i < r; ++i) {
    base(i, 0) = 1;
    const RatVector& v = (*ctx.pts)[vs[i]];
    for (int j = 0; j < r; ++j) base(i, j + 1) = v(j);
  }
  RatMatrix minor(r, r);
  auto minor_det = [&](int drop_col) {
    for (int i = 0; i < r; ++i) {
      int t = 0;
      for (int j = 0; j <= r; ++j) {
        if (j == drop_col) continue;
        minor(i, t++) = base(i, j);
      }
    }
    return minor.determinant();
  };
  normal->resize(r);
  for (int j = 0; j < r; ++j) {
    Rat mj = minor_det(j + 1);
    (*normal)(j) = ((r + j + 1) % 2 == 0) ? mj : -mj;
  }
  Rat m0 = minor_det(0);
  *offset = ((r + 1) % 2 == 0) ? m0 : -m0;
}

int facet_side(const Ctx& ctx, const Facet& f, int point_idx,
               const RatVector& coords) {
  Rat s = -f.offset;
  for (int j = 0; j < ctx.r; ++j) s += f.normal(j) * coords(j);
  if (s > 0) return 1;
  if (s < 0) return -1;
  std::vector<Row> rows;
  rows.reserve(ctx.r + 1);
  for (int v : f.vs) rows.push_back({v, (*ctx.pts)[v]});
  rows.push_back({point_idx, coords});
  return sos_sign(std::move(rows), ctx.r);
}

struct Hull {
  std::vector<Facet> facets;
  RatVector o;  // strict interior point of the true hull
};

void orient_facet(const Ctx& ctx, Facet* f, const RatVector& o) {
  if (facet_side(ctx, *f, -1, o) > 0) {
    std::swap(f->vs[0], f->vs[1]);
    f->normal = -f->normal;
    f->offset = -f->offset;
  }
}

using RidgeMap = std::map<std::vector<int>, std::vector<int>>;

std::vector<int> ridge_of(const std::vector<int>& vs, int omit) {
  std::vector<int> ridge;
  ridge.reserve(vs.size() - 1);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (static_cast<int>(i) != omit) ridge.push_back(vs[i]);
  std::sort(ridge.begin(), ridge.end());
  return ridge;
}

void register_facet(RidgeMap& ridges, const std::vector<Facet>& facets, int id) {
  const auto& vs = facets[id].vs;
  for (std::size_t k = 0; k < vs.size(); ++k)
    ridges[ridge_of(vs, static_cast<int>(k))].push_back(id);
}

void unregister_facet(RidgeMap& ridges, const std::vector<Facet>& facets, int id) {
  const auto& vs = facets[id].vs;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    auto key = ridge_of(vs, static_cast<int>(k));
    auto it = ridges.find(key);
    auto& owners = it->second;
    owners.erase(std::remove(owners.begin(), owners.end(), id), owners.end());
    if (owners.empty()) ridges.erase(it);
  }
}

// pts must be deduplicated and affinely span R^r; independent lists r+1
// affinely independent point indices for the seed simplex.
Hull build_hull(const std::vector<RatVector>& pts,
                const std::vector<int>& independent, int r) {
  Ctx ctx{&pts, r};
  Hull hull;
  hull.o = RatVector::Zero(r);
  for (int idx : independent) hull.o += pts[idx];
  hull.o /= Rat(r + 1);

  RidgeMap ridges;
  std::vector<bool> in_seed(pts.size(), false);
  for (int idx : independent) in_seed[idx] = true;
  for (int k = 0; k <= r; ++k) {
    Facet f;
    for (int i = 0; i <= r; ++i)
      if (i != k) f.vs.push_back(independent[i]);
    facet_plane(ctx, f.vs, &f.normal, &f.offset);
    orient_facet(ctx, &f, hull.o);
    hull.facets.push_back(std::move(f));
    register_facet(ridges, hull.facets, static_cast<int>(hull.facets.size()) - 1);
  }

  std::vector<char> visible;
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (in_seed[p]) continue;
    visible.assign(hull.facets.size(), 0);
    bool any = false;
    for (std::size_t id = 0; id < hull.facets.size(); ++id) {
      if (!hull.facets[id].alive) continue;
      if (facet_side(ctx, hull.facets[id], p, pts[p]) > 0) {
        visible[id] = 1;
        any = true;
      }
    }
    if (!any) continue;

    // Horizon: ridges with exactly one visible owner.
    std::vector<std::vector<int>> horizon;
    for (std::size_t id = 0; id < hull.facets.size(); ++id) {
      if (!visible[id]) continue;
      const auto& vs = hull.facets[id].vs;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        auto key = ridge_of(vs, static_cast<int>(k));
        const auto& owners = ridges.at(key);
        bool boundary = false;
        for (int owner : owners)
          if (!visible[owner]) boundary = true;
        if (boundary) horizon.push_back(key);
      }
    }
    for (std::size_t id = 0; id < hull.facets.size(); ++id) {
      if (!visible[id]) continue;
      unregister_facet(ridges, hull.facets, static_cast<int>(id));
      hull.facets[id].alive = false;
    }
    for (const auto& ridge : horizon) {
      Facet f;
      f.vs = ridge;
      f.vs.push_back(p);
      facet_plane(ctx, f.vs, &f.normal, &f.offset);
      orient_facet(ctx, &f, hull.o);
      hull.facets.push_back(std::move(f));
      register_facet(ridges, hull.facets, static_cast<int>(hull.facets.size()) - 1);
    }
  }

  hull.facets.erase(std::remove_if(hull.facets.begin(), hull.facets.end(),
                                   [](const Facet& f) { return !f.alive; }),
                    hull.facets.end());
  return hull;
}

struct Deduped {
  std::vector<RatVector> pts;      // unique points, first-occurrence order
  std::vector<int> original_index;  // unique -> first original index
};

Deduped dedupe(const std::vector<RatVector>& pts) {
  Deduped out;
  auto less = [](const RatVector& a, const RatVector& b) {
    return vec_lex_less(a, b);
  };
  std::map<RatVector, int, decltype(less)> seen(less);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (seen.emplace(pts[i], static_cast<int>(i)).second) {
      out.pts.push_back(pts[i]);
      out.original_index.push_back(static_cast<int>(i));
    }
  }
  return out;
}

struct Chart {
  int rank = 0;
  std::vector<int> coords;       // kept coordinate axes
  std::vector<int> independent;  // rank+1 affinely independent unique indices
};

Chart affine_chart(const std::vector<RatVector>& pts, int ambient) {
  Chart chart;
  if (pts.size() <= 1) return chart;
  RatMatrix diff(ambient, pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (int j = 0; j < ambient; ++j) diff(j, i - 1) = pts[i](j) - pts[0](j);
  RankInfo info = row_echelon_rank(diff);
  chart.rank = info.rank;
  chart.coords = info.pivot_rows;
  std::sort(chart.coords.begin(), chart.coords.end());
  chart.independent.push_back(0);
  for (int c : info.pivot_cols) chart.independent.push_back(c + 1);
  return chart;
}

std::vector<RatVector> apply_chart(const std::vector<RatVector>& pts,
                                   const std::vector<int>& coords) {
  std::vector<RatVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    RatVector q(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) q(j) = p(coords[j]);
    out.push_back(std::move(q));
  }
  return out;
}

RatVector normalize_plane(const RatVector& normal, const Rat& offset) {
  RatVector v(normal.size() + 1);
  for (int j = 0; j < normal.size(); ++j) v(j) = normal(j);
  v(normal.size()) = offset;
  Int lcm_den = 1;
  for (int j = 0; j < v.size(); ++j)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v(j).get_den().get_mpz_t());
  Int gcd_num = 0;
  for (int j = 0; j < v.size(); ++j) {
    Int scaled = v(j).get_num() * (lcm_den / v(j).get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat s = Rat(lcm_den) / Rat(gcd_num);  // gcd_num > 0: normal is nonzero
  for (int j = 0; j < v.size(); ++j) v(j) *= s;
  return v;
}

}  // namespace

std::vector<int> extreme_point_indices(const std::vector<RatVector>& input) {
  if (input.empty()) throw InputError("polytope needs at least one point");
  const int ambient = static_cast<int>(input[0].size());
  for (const auto& p : input)
    if (p.size() != ambient) throw InputError("point dimension mismatch");

  Deduped dd = dedupe(input);
  if (dd.pts.size() == 1) return {dd.original_index[0]};

  Chart chart = affine_chart(dd.pts, ambient);
  const int r = chart.rank;
  std::vector<RatVector> work = apply_chart(dd.pts, chart.coords);

  std::vector<int> extreme_unique;
  if (r == 1) {
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      if (work[i](0) < work[lo](0)) lo = static_cast<int>(i);
      if (work[i](0) > work[hi](0)) hi = static_cast<int>(i);
    }
    extreme_unique = {lo, hi};
  } else {
    Hull hull = build_hull(work, chart.independent, r);
    std::set<int> verts;
    std::set<std::vector<Rat>> planes;
    std::vector<std::pair<RatVector, Rat>> plane_list;
    for (const auto& f : hull.facets) {
      for (int v : f.vs) verts.insert(v);
      bool zero = true;
      for (int j = 0; j < r; ++j)
        if (f.normal(j) != 0) zero = false;
      if (zero) continue;
      RatVector key = normalize_plane(f.normal, f.offset);
      std::vector<Rat> keyv(key.data(), key.data() + key.size());
      if (planes.insert(keyv).second)
        plane_list.emplace_back(f.normal, f.offset);
    }
    for (int v : verts) {
      std::vector<int> active;
      for (std::size_t h = 0; h < plane_list.size(); ++h) {
        Rat s = -plane_list[h].second;
        for (int j = 0; j < r; ++j) s += plane_list[h].first(j) * work[v](j);
        if (s == 0) active.push_back(static_cast<int>(h));
      }
      if (static_cast<int>(active.size()) < r) continue;
      RatMatrix normals(r, active.size());
      for (std::size_t c = 0; c < active.size(); ++c)
        for (int j = 0; j < r; ++j) normals(j, c) = plane_list[active[c]].first(j);
      if (row_echelon_rank(normals).rank == r) extreme_unique.push_back(v);
    }
  }

  std::vector<int> out;
  out.reserve(extreme_unique.size());
  for (int u : extreme_unique) out.push_back(dd.original_index[u]);
  std::sort(out.begin(), out.end());
  return out;
}

Rat hull_volume(int ambient_dim, const std::vector<RatVector>& input) {
  if (input.empty()) throw InputError("polytope needs at least one point");
  for (const auto& p : input)
    if (p.size() != ambient_dim) throw InputError("point dimension mismatch");
  if (ambient_dim == 0) return 0;

  Deduped dd = dedupe(input);
  if (dd.pts.size() == 1) return 0;
  Chart chart = affine_chart(dd.pts, ambient_dim);
  if (chart.rank < ambient_dim) return 0;
  const int r = ambient_dim;
  if (r == 1) {
    Rat lo = dd.pts[0](0), hi = dd.pts[0](0);
    for (const auto& p : dd.pts) {
      if (p(0) < lo) lo = p(0);
      if (p(0) > hi) hi = p(0);
    }
    return hi - lo;
  }

  Hull hull = build_hull(dd.pts, chart.independent, r);
  Rat total = 0;
  RatMatrix cone(r, r);
  Rat rfact(factorial(r));
  for (const auto& f : hull.facets) {
    bool zero = true;
    for (int j = 0; j < r; ++j)
      if (f.normal(j) != 0) zero = false;
    if (zero) continue;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) cone(i, j) = dd.pts[f.vs[i]](j) - hull.o(j);
    Rat d = cone.determinant();
    if (d < 0) d = -d;
    total += d / rfact;
  }
  return total;
}

}  // namespace hull
}  // namespace lorcheck
