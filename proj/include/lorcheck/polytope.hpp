#ifndef LORCHECK_POLYTOPE_HPP
#define LORCHECK_POLYTOPE_HPP

#include <vector>

#include "lorcheck/types.hpp"

namespace lorcheck {

// V-representation polytope. Invariant: vertices() holds exactly the extreme
// points of the convex hull of the construction input, in lexicographic order,
// so structural equality is set equality.
class Polytope {
 public:
  Polytope(int ambient_dim, std::vector<RatVector> points);

  int ambient_dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return verts_; }
  int affine_dim() const { return affine_dim_; }
  bool operator==(const Polytope& o) const;

  // Fast path for vertex sets already known to be canonical and sorted.
  static Polytope trusted(int ambient_dim, std::vector<RatVector> verts,
                          int affine_dim);

 private:
  Polytope() = default;
  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RatVector> verts_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rat& c);
Polytope translate(const Polytope& p, const RatVector& t);
// Removes the listed coordinates (the projection forgetting them).
Polytope project_drop(const Polytope& p, const std::vector<int>& coords);
// Full-dimensional Lebesgue volume; zero when affine_dim < ambient_dim.
Rat volume(const Polytope& p);

Polytope unit_cube(int n);
Polytope standard_simplex(int n);
Polytope segment(int n, int axis);  // [0, e_axis]

// Hull internals shared with the canonicalization path.
namespace hull {

// Extreme points among pts (dimension-agnostic; handles lower-dimensional and
// degenerate inputs). Returns indices into pts, sorted.
std::vector<int> extreme_point_indices(const std::vector<RatVector>& pts);

// Volume of conv(pts) inside its ambient space (0 if not full-dimensional).
Rat hull_volume(int ambient_dim, const std::vector<RatVector>& pts);

}  // namespace hull

}  // namespace lorcheck

#endif
