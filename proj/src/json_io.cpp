#include "lorcheck/json_io.hpp"

#include <sstream>

namespace lorcheck {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_number_integer())
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("rational must be a \"p/q\" string or an integer");
}

Json vector_to_json(const RatVector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(rat_to_json(v(i)));
  return arr;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be a JSON array");
  RatVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = rat_from_json(j.at(i));
  return v;
}

Json matrix_to_json(const RatMatrix& m) {
  Json arr = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const Json& first = j.at(0);
  if (!first.is_array() || first.empty())
    throw InputError("matrix rows must be nonempty arrays");
  const std::size_t cols = first.size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw InputError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(row.at(c));
  }
  return m;
}

Json hompoly_to_json(const HomPoly& f) {
  Json terms = Json::array();
  for (const auto& [mono, coef] : f.terms) {
    Json t;
    t["exp"] = mono;
    t["coef"] = rat_to_json(coef);
    terms.push_back(std::move(t));
  }
  Json j;
  j["nvars"] = f.nvars;
  j["degree"] = f.degree;
  j["terms"] = std::move(terms);
  return j;
}

HomPoly hompoly_from_json(const Json& j) {
  int nvars = int_field(j, "nvars");
  int degree = int_field(j, "degree");
  const Json& terms = require_field(j, "terms");
  if (!terms.is_array()) throw InputError("field \"terms\" must be an array");
  std::vector<std::pair<MultiIndex, Rat>> parsed;
  for (const Json& t : terms) {
    const Json& exp = require_field(t, "exp");
    if (!exp.is_array()) throw InputError("term \"exp\" must be an array");
    MultiIndex mono;
    for (const Json& e : exp) {
      if (!e.is_number_integer())
        throw InputError("term exponents must be integers");
      mono.push_back(e.get<int>());
    }
    parsed.emplace_back(std::move(mono), rat_from_json(require_field(t, "coef")));
  }
  return make_hompoly(nvars, degree, parsed);
}

Json polytope_to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
  Json j;
  j["dim"] = p.ambient_dim();
  j["vertices"] = std::move(verts);
  return j;
}

Polytope polytope_from_json(const Json& j) {
  int dim = int_field(j, "dim");
  const Json& verts = require_field(j, "vertices");
  if (!verts.is_array() || verts.empty())
    throw InputError("field \"vertices\" must be a nonempty array");
  std::vector<RatVector> pts;
  for (const Json& v : verts) {
    RatVector p = vector_from_json(v);
    if (p.size() != dim)
      throw InputError("vertex length does not match \"dim\"");
    pts.push_back(std::move(p));
  }
  return Polytope(dim, std::move(pts));
}

Json partition_to_json(const Partition& lambda, int e) {
  Json j;
  j["parts"] = lambda.parts;
  j["e"] = e;
  return j;
}

std::pair<Partition, int> partition_from_json(const Json& j) {
  const Json& parts = require_field(j, "parts");
  if (!parts.is_array()) throw InputError("field \"parts\" must be an array");
  std::vector<int> p;
  for (const Json& x : parts) {
    if (!x.is_number_integer())
      throw InputError("partition parts must be integers");
    p.push_back(x.get<int>());
  }
  int e = int_field(j, "e");
  return {make_partition(std::move(p)), e};
}

MixedVolumeSpec mixed_volume_spec_from_json(const Json& j) {
  MixedVolumeSpec spec;
  const Json& bodies = require_field(j, "bodies");
  if (!bodies.is_array() || bodies.empty())
    throw InputError("field \"bodies\" must be a nonempty array");
  for (const Json& b : bodies) spec.bodies.push_back(polytope_from_json(b));
  const Json& mult = require_field(j, "multiplicities");
  if (!mult.is_array())
    throw InputError("field \"multiplicities\" must be an array");
  for (const Json& m : mult) {
    if (!m.is_number_integer())
      throw InputError("multiplicities must be integers");
    spec.multiplicities.push_back(m.get<int>());
  }
  return spec;
}

GroundSet ground_set_from_json(const Json& j) {
  GroundSet g;
  g.m = int_field(j, "m");
  const Json& bodies = require_field(j, "bodies");
  if (!bodies.is_array() || bodies.empty())
    throw InputError("field \"bodies\" must be a nonempty array");
  g.bodies.clear();
  for (const Json& b : bodies) g.bodies.push_back(polytope_from_json(b));
  const Json& w = require_field(j, "W");
  if (w.is_string()) {
    if (w.get<std::string>() != "unit-cube")
      throw InputError("field \"W\" must be a polytope or \"unit-cube\"");
    g.W = unit_cube(g.bodies[0].ambient_dim());
  } else {
    g.W = polytope_from_json(w);
  }
  return g;
}

SchurAfInstance schur_af_instance_from_json(const Json& j) {
  SchurAfInstance inst;
  const Json& tuples = require_field(j, "tuples");
  if (!tuples.is_array())
    throw InputError("field \"tuples\" must be an array");
  for (const Json& t : tuples) {
    SchurTuple tuple;
    auto [lambda, e] = partition_from_json(require_field(t, "partition"));
    tuple.lambda = std::move(lambda);
    const Json& bodies = require_field(t, "bodies");
    if (!bodies.is_array())
      throw InputError("tuple field \"bodies\" must be an array");
    for (const Json& b : bodies) tuple.bodies.push_back(polytope_from_json(b));
    if (static_cast<int>(tuple.bodies.size()) != e)
      throw InputError("tuple body count must equal the partition's \"e\"");
    inst.spec.tuples.push_back(std::move(tuple));
  }
  inst.M = polytope_from_json(require_field(j, "M"));
  inst.N = polytope_from_json(require_field(j, "N"));
  return inst;
}

Sweep sweep_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "full")
      throw InputError("sweep must be \"full\" or {\"samples\", \"seed\"}");
    return Sweep::full_sweep();
  }
  if (j.is_object()) {
    const Json& samples = require_field(j, "samples");
    if (!samples.is_number_integer() || samples.get<std::int64_t>() < 1)
      throw InputError("sweep \"samples\" must be a positive integer");
    std::uint64_t seed = 0;
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_integer())
        throw InputError("sweep \"seed\" must be an integer");
      seed = j.at("seed").get<std::uint64_t>();
    }
    return Sweep::sample(samples.get<std::int64_t>(), seed);
  }
  throw InputError("sweep must be \"full\" or {\"samples\", \"seed\"}");
}

IneqInstance ineq_instance_from_json(const Json& j) {
  IneqInstance inst;
  inst.poly = hompoly_from_json(require_field(j, "poly"));
  const Json& mode = require_field(j, "mode");
  if (!mode.is_string()) throw InputError("field \"mode\" must be a string");
  inst.mode = mode.get<std::string>();
  if (j.contains("sweep")) inst.sweep = sweep_from_json(j.at("sweep"));
  const Json& points = require_field(j, "points");
  if (!points.is_array() || points.empty())
    throw InputError("field \"points\" must be a nonempty array");

  if (inst.mode == "rkt" || inst.mode == "rkt-optimal") {
    for (const Json& p : points) inst.points.push_back(vector_from_json(p));
  } else if (inst.mode == "pr" || inst.mode == "supermod") {
    for (const Json& p : points) {
      if (!p.is_array() || p.size() != 3)
        throw InputError("pr/supermod points must be triples of vectors");
      inst.triples.push_back({vector_from_json(p.at(0)),
                              vector_from_json(p.at(1)),
                              vector_from_json(p.at(2))});
    }
  } else if (inst.mode == "af-form") {
    for (const Json& p : points) {
      if (!p.is_array())
        throw InputError("af-form points must be arrays of vectors");
      std::vector<RatVector> tuple;
      for (const Json& v : p) tuple.push_back(vector_from_json(v));
      inst.tuples.push_back(std::move(tuple));
    }
  } else {
    throw InputError("unknown mode \"" + inst.mode + "\"");
  }
  return inst;
}

nlohmann::json witness_point(const RatVector& x) { return vector_to_json(x); }

nlohmann::json verdict_to_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? *v.witness : Json(nullptr);
  j["margin"] = v.margin ? Json(rat_to_string(*v.margin)) : Json(nullptr);
  return j;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string json_digest(const Json& j) {
  std::uint64_t h = fnv1a64(j.dump());
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace lorcheck
