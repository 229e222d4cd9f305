#include "lorcheck/polytope.hpp"

#include <algorithm>
#include <set>

#include "lorcheck/inertia.hpp"

namespace lorcheck {

namespace {

int affine_dim_of(const std::vector<RatVector>& verts, int ambient) {
  if (verts.size() <= 1) return 0;
  RatMatrix diff(ambient, verts.size() - 1);
  for (std::size_t i = 1; i < verts.size(); ++i)
    for (int j = 0; j < ambient; ++j) diff(j, i - 1) = verts[i](j) - verts[0](j);
  return row_echelon_rank(diff).rank;
}

}  // namespace

Polytope::Polytope(int ambient_dim, std::vector<RatVector> points) {
  if (ambient_dim < 1) throw InputError("ambient dimension must be positive");
  if (points.empty()) throw InputError("polytope needs at least one point");
  for (const auto& p : points)
    if (p.size() != ambient_dim)
      throw InputError("point dimension does not match ambient dimension");
  dim_ = ambient_dim;
  std::vector<int> keep = hull::extreme_point_indices(points);
  verts_.reserve(keep.size());
  for (int idx : keep) verts_.push_back(points[idx]);
  std::sort(verts_.begin(), verts_.end(),
            [](const RatVector& a, const RatVector& b) { return vec_lex_less(a, b); });
  affine_dim_ = affine_dim_of(verts_, dim_);
}

bool Polytope::operator==(const Polytope& o) const {
  if (dim_ != o.dim_ || verts_.size() != o.verts_.size()) return false;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (!vec_eq(verts_[i], o.verts_[i])) return false;
  return true;
}

Polytope Polytope::trusted(int ambient_dim, std::vector<RatVector> verts,
                           int affine_dim) {
  Polytope p;
  p.dim_ = ambient_dim;
  p.affine_dim_ = affine_dim;
  p.verts_ = std::move(verts);
  return p;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw InputError("Minkowski sum needs matching ambient dimensions");
  std::vector<RatVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return Polytope(p.ambient_dim(), std::move(sums));
}

Polytope scale(const Polytope& p, const Rat& c) {
  std::vector<RatVector> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(c * v);
  if (c == 0) return Polytope(p.ambient_dim(), std::move(verts));
  std::sort(verts.begin(), verts.end(),
            [](const RatVector& a, const RatVector& b) { return vec_lex_less(a, b); });
  return Polytope::trusted(p.ambient_dim(), std::move(verts), p.affine_dim());
}

Polytope translate(const Polytope& p, const RatVector& t) {
  if (t.size() != p.ambient_dim())
    throw InputError("translation vector dimension mismatch");
  std::vector<RatVector> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(v + t);
  std::sort(verts.begin(), verts.end(),
            [](const RatVector& a, const RatVector& b) { return vec_lex_less(a, b); });
  return Polytope::trusted(p.ambient_dim(), std::move(verts), p.affine_dim());
}

Polytope project_drop(const Polytope& p, const std::vector<int>& coords) {
  std::set<int> drop;
  for (int c : coords) {
    if (c < 0 || c >= p.ambient_dim())
      throw InputError("projection coordinate out of range");
    drop.insert(c);
  }
  std::vector<int> keep;
  for (int j = 0; j < p.ambient_dim(); ++j)
    if (!drop.count(j)) keep.push_back(j);
  if (keep.empty())
    throw InputError("projection must keep at least one coordinate");
  std::vector<RatVector> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    RatVector w(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) w(j) = v(keep[j]);
    pts.push_back(std::move(w));
  }
  return Polytope(static_cast<int>(keep.size()), std::move(pts));
}

Rat volume(const Polytope& p) {
  if (p.affine_dim() < p.ambient_dim()) return 0;
  return hull::hull_volume(p.ambient_dim(), p.vertices());
}

Polytope unit_cube(int n) {
  if (n < 1) throw InputError("cube dimension must be positive");
  std::vector<RatVector> verts;
  verts.reserve(std::size_t(1) << n);
  for (std::size_t i = 0; i < (std::size_t(1) << n); ++i) {
    RatVector v(n);
    for (int j = 0; j < n; ++j) v(j) = (i >> (n - 1 - j)) & 1;
    verts.push_back(std::move(v));
  }
  return Polytope::trusted(n, std::move(verts), n);
}

Polytope standard_simplex(int n) {
  if (n < 1) throw InputError("simplex dimension must be positive");
  std::vector<RatVector> verts;
  verts.push_back(RatVector::Zero(n));
  for (int j = n - 1; j >= 0; --j) {
    RatVector v = RatVector::Zero(n);
    v(j) = 1;
    verts.push_back(std::move(v));
  }
  return Polytope::trusted(n, std::move(verts), n);
}

Polytope segment(int n, int axis) {
  if (n < 1) throw InputError("ambient dimension must be positive");
  if (axis < 0 || axis >= n) throw InputError("segment axis out of range");
  std::vector<RatVector> verts;
  verts.push_back(RatVector::Zero(n));
  RatVector e = RatVector::Zero(n);
  e(axis) = 1;
  verts.push_back(std::move(e));
  return Polytope::trusted(n, std::move(verts), 1);
}

}  // namespace lorcheck
