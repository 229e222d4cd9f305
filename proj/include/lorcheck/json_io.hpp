#ifndef LORCHECK_JSON_IO_HPP
#define LORCHECK_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lorcheck/hompoly.hpp"
#include "lorcheck/inequalities.hpp"
#include "lorcheck/mixed_volume.hpp"
#include "lorcheck/numerical_dim.hpp"
#include "lorcheck/polytope.hpp"
#include "lorcheck/schur.hpp"
#include "lorcheck/schur_valuation.hpp"
#include "lorcheck/verdict.hpp"

namespace lorcheck {

using Json = nlohmann::json;

// Rationals cross the JSON boundary as canonical strings "p" or "p/q";
// integer JSON numbers are accepted on input for convenience.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {"nvars": n, "degree": d, "terms": [{"exp": [..], "coef": "p/q"}, ...]}
Json hompoly_to_json(const HomPoly& f);
HomPoly hompoly_from_json(const Json& j);

// {"dim": n, "vertices": [["p/q", ...], ...]}
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

// {"parts": [..], "e": e} -> (partition, e)
Json partition_to_json(const Partition& lambda, int e);
std::pair<Partition, int> partition_from_json(const Json& j);

// {"bodies": [<Polytope>, ...], "multiplicities": [..]}
MixedVolumeSpec mixed_volume_spec_from_json(const Json& j);

// {"m": m, "W": <Polytope>|"unit-cube", "bodies": [<Polytope>, ...]}
GroundSet ground_set_from_json(const Json& j);

// {"tuples": [{"partition": {...}, "bodies": [...]}, ...],
//  "M": <Polytope>, "N": <Polytope>}
struct SchurAfInstance {
  SchurValuationSpec spec;
  Polytope M = unit_cube(1);
  Polytope N = unit_cube(1);
};
SchurAfInstance schur_af_instance_from_json(const Json& j);

// {"poly": <HomPoly>, "points": [...], "mode": "rkt"|"rkt-optimal"|"pr"|
//  "supermod"|"af-form", "sweep": "full"|{"samples": N, "seed": S}}.
// For pr/supermod each point entry is an array of three vectors; for af-form
// an array of degree-many vectors.
struct IneqInstance {
  HomPoly poly;
  std::string mode;
  Sweep sweep = Sweep::full_sweep();
  std::vector<RatVector> points;
  std::vector<std::array<RatVector, 3>> triples;
  std::vector<std::vector<RatVector>> tuples;
};
IneqInstance ineq_instance_from_json(const Json& j);

Sweep sweep_from_json(const Json& j);

// FNV-1a over the canonical (sorted-key, no-whitespace) dump; stable input
// fingerprint for reports.
std::uint64_t fnv1a64(const std::string& bytes);
std::string json_digest(const Json& j);

}  // namespace lorcheck

#endif
