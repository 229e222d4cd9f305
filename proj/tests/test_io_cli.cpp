#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lorcheck/cli.hpp"
#include "lorcheck/json_io.hpp"

using namespace lorcheck;

namespace {

std::string write_fixture(const std::string& name, const std::string& body) {
  std::string path = "tmp_io_" + name + ".json";
  std::ofstream out(path);
  out << body;
  return path;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
  Json report;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  CliResult r{code, out.str(), err.str(), nullptr};
  if (!r.out.empty() && r.out[0] == '{')
    r.report = Json::parse(r.out);
  return r;
}

const char* kHuhJson = R"({
  "nvars": 3, "degree": 3,
  "terms": [
    {"exp": [3,0,0], "coef": "14"},
    {"exp": [2,1,0], "coef": "6"},
    {"exp": [2,0,1], "coef": "24"},
    {"exp": [1,1,1], "coef": "12"},
    {"exp": [1,0,2], "coef": "6"},
    {"exp": [0,1,2], "coef": "3"}
  ]
})";

}  // namespace

TEST_CASE("rational JSON round trip") {
  CHECK(rat_to_json(rat(3, 4)) == Json("3/4"));
  CHECK(rat_to_json(Rat(-5)) == Json("-5"));
  CHECK(rat_from_json(Json("3/4")) == rat(3, 4));
  CHECK(rat_from_json(Json(7)) == Rat(7));
  CHECK(rat_from_json(Json(-2)) == Rat(-2));
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), InputError);
  CHECK_THROWS_AS(rat_from_json(Json("x")), InputError);
}

TEST_CASE("vector and matrix JSON round trip") {
  RatVector v(3);
  v << rat(1, 2), Rat(-3), Rat(0);
  CHECK(vector_from_json(vector_to_json(v)) == v);
  RatMatrix m(2, 2);
  m << Rat(1), rat(2, 3), Rat(0), Rat(-1);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(vector_from_json(Json::object()), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), InputError);
}

TEST_CASE("polynomial JSON round trip") {
  HomPoly f = hompoly_from_json(Json::parse(kHuhJson));
  CHECK(f.nvars == 3);
  CHECK(f.degree == 3);
  CHECK(f.terms.size() == 6);
  CHECK(f.terms.at({3, 0, 0}) == 14);
  CHECK(hompoly_from_json(hompoly_to_json(f)) == f);
  CHECK_THROWS_AS(hompoly_from_json(Json::parse(R"({"nvars": 2})")),
                  InputError);
  CHECK_THROWS_AS(
      hompoly_from_json(Json::parse(
          R"({"nvars": 2, "degree": 2, "terms": [{"exp": [1], "coef": "1"}]})")),
      InputError);
}

TEST_CASE("polytope JSON round trip") {
  Polytope cube = unit_cube(3);
  CHECK(polytope_from_json(polytope_to_json(cube)) == cube);
  Polytope p = polytope_from_json(Json::parse(
      R"({"dim": 2, "vertices": [["0","0"],["1","0"],["1/2","0"],["0","1"]]})"));
  CHECK(p.vertices().size() == 3);  // midpoint pruned
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 2})")), InputError);
}

TEST_CASE("partition JSON round trip") {
  auto [lambda, e] = partition_from_json(Json::parse(
      R"({"parts": [2, 1], "e": 3})"));
  CHECK(lambda.parts == std::vector<int>{2, 1});
  CHECK(e == 3);
  CHECK(partition_to_json(lambda, e) ==
        Json::parse(R"({"parts": [2, 1], "e": 3})"));
}

TEST_CASE("inequality instance JSON parsing") {
  Json j = Json::parse(R"({
    "poly": {"nvars": 2, "degree": 2, "terms": [{"exp": [1,1], "coef": 1}]},
    "mode": "rkt",
    "sweep": "full",
    "points": [["1", "2"], ["0", "1"]]
  })");
  IneqInstance inst = ineq_instance_from_json(j);
  CHECK(inst.mode == "rkt");
  CHECK(inst.sweep.full);
  CHECK(inst.points.size() == 2);

  Json sampled = j;
  sampled["sweep"] = {{"samples", 10}, {"seed", 4}};
  IneqInstance inst2 = ineq_instance_from_json(sampled);
  CHECK_FALSE(inst2.sweep.full);
  CHECK(inst2.sweep.samples == 10);
  CHECK(inst2.sweep.seed == 4);

  Json pr = Json::parse(R"({
    "poly": {"nvars": 2, "degree": 2, "terms": [{"exp": [1,1], "coef": 1}]},
    "mode": "pr",
    "points": [[["1","1"],["1","0"],["0","1"]]]
  })");
  IneqInstance inst3 = ineq_instance_from_json(pr);
  CHECK(inst3.triples.size() == 1);

  Json bad = j;
  bad["mode"] = "unknown";
  CHECK_THROWS_AS(ineq_instance_from_json(bad), InputError);
}

TEST_CASE("ground set JSON accepts the unit-cube shorthand") {
  Json j = Json::parse(R"({
    "m": 2,
    "W": "unit-cube",
    "bodies": [
      {"dim": 2, "vertices": [["0","0"],["1","0"]]},
      {"dim": 2, "vertices": [["0","0"],["0","1"]]}
    ]
  })");
  GroundSet g = ground_set_from_json(j);
  CHECK(g.m == 2);
  CHECK(g.W == unit_cube(2));
  CHECK(g.bodies.size() == 2);
  Json bad = j;
  bad["W"] = "ball";
  CHECK_THROWS_AS(ground_set_from_json(bad), InputError);
}

TEST_CASE("verdict JSON shape") {
  Json ok = verdict_to_json(Verdict::ok());
  CHECK(ok["holds"] == true);
  CHECK(ok["witness"].is_null());
  CHECK(ok["margin"].is_null());
  Json okm = verdict_to_json(Verdict::ok_with_margin(rat(2, 3)));
  CHECK(okm["margin"] == "2/3");
  Witness w;
  w["kind"] = "demo";
  Json bad = verdict_to_json(Verdict::fail(w, Rat(-1)));
  CHECK(bad["holds"] == false);
  CHECK(bad["witness"]["kind"] == "demo");
  CHECK(bad["margin"] == "-1");
}

TEST_CASE("digests are canonical and key-order independent") {
  Json a = Json::parse(R"({"x": 1, "y": "2/3"})");
  Json b = Json::parse(R"({"y": "2/3", "x": 1})");
  CHECK(json_digest(a) == json_digest(b));
  CHECK(json_digest(a).size() == 16);
  CHECK(json_digest(a) != json_digest(Json::parse(R"({"x": 2, "y": "2/3"})")));
  // FNV-1a 64-bit of the empty string is the offset basis.
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("cli requires a subcommand and reports bad input") {
  CliResult none = cli({});
  CHECK(none.code == 2);
  CHECK(none.err.find("error:") == 0);

  CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-lorentzian") != std::string::npos);

  CliResult missing = cli({"check-lorentzian", "no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  std::string broken = write_fixture("broken", "{nope");
  CliResult malformed = cli({"check-lorentzian", broken});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);
}

TEST_CASE("cli check-lorentzian exit codes and report") {
  std::string huh = write_fixture("huh", kHuhJson);
  CliResult good = cli({"check-lorentzian", huh});
  CHECK(good.code == 0);
  CHECK(good.report["command"] == "check-lorentzian");
  CHECK(good.report["verdict"]["holds"] == true);
  CHECK(good.report["input_digest"].is_string());

  std::string round = write_fixture("round", R"({
    "nvars": 2, "degree": 2,
    "terms": [{"exp": [2,0], "coef": 1}, {"exp": [0,2], "coef": 1}]
  })");
  CliResult bad = cli({"check-lorentzian", round});
  CHECK(bad.code == 1);
  CHECK(bad.report["verdict"]["holds"] == false);
  CHECK(bad.report["verdict"]["witness"]["kind"] == "exchange-failure");
}

TEST_CASE("cli check-rkt dispatches modes and rejects mismatches") {
  std::string inst = write_fixture("rkt_inst", std::string(R"({
    "poly": )") + kHuhJson + R"(,
    "mode": "rkt",
    "sweep": "full",
    "points": [["1","0","0"], ["1","1","1"]]
  })");
  CliResult ok = cli({"check-rkt", inst});
  CHECK(ok.code == 0);
  CHECK(ok.report["mode"] == "rkt");

  std::string opt = write_fixture("rkt_opt", std::string(R"({
    "poly": )") + kHuhJson + R"(,
    "mode": "rkt-optimal",
    "points": [["1","0","0"]]
  })");
  CliResult viol = cli({"check-rkt", opt});
  CHECK(viol.code == 1);
  CHECK(viol.report["verdict"]["witness"]["kind"] == "rkt-optimal-violation");

  std::string pr = write_fixture("rkt_pr", R"({
    "poly": {"nvars": 2, "degree": 2, "terms": [{"exp": [1,1], "coef": 1}]},
    "mode": "pr",
    "points": [[["1","1"],["1","0"],["0","1"]]]
  })");
  CliResult wrong = cli({"check-rkt", pr});
  CHECK(wrong.code == 2);
  CHECK(wrong.err.find("does not accept mode") != std::string::npos);
  CliResult right = cli({"check-pr", pr});
  CHECK(right.code == 0);
}

TEST_CASE("cli computes mixed volumes, Schur polynomials, discriminants") {
  std::string mv = write_fixture("mv", R"({
    "bodies": [
      {"dim": 3, "vertices": [["0","0","0"],["1","0","0"]]},
      {"dim": 3, "vertices": [["0","0","0"],["0","1","0"]]},
      {"dim": 3, "vertices": [["0","0","0"],["0","0","1"]]}
    ],
    "multiplicities": [1, 1, 1]
  })");
  CliResult r = cli({"mixed-volume", mv});
  CHECK(r.code == 0);
  CHECK(r.report["value"] == "1/6");

  std::string schur_in = write_fixture("schur", R"({"parts": [2], "e": 3})");
  CliResult s = cli({"schur", schur_in});
  CHECK(s.code == 0);
  HomPoly sp = hompoly_from_json(s.report["poly"]);
  CHECK(sp == elementary_symmetric(2, 3));

  std::string ds = write_fixture("dschur", R"({"parts": [1], "e": 3, "i": 1})");
  CliResult d = cli({"derived-schur", ds});
  CHECK(d.code == 0);
  CHECK(hompoly_from_json(d.report["poly"]) ==
        make_hompoly(3, 0, {{{0, 0, 0}, Rat(3)}}));

  std::string md = write_fixture("md", R"({
    "matrices": [[["1","0"],["0","0"]], [["0","0"],["0","1"]]]
  })");
  CliResult m = cli({"mixed-disc", md});
  CHECK(m.code == 0);
  CHECK(m.report["value"] == "1/2");
}

TEST_CASE("cli volume-poly") {
  std::string vp = write_fixture("vp", R"({
    "bodies": [
      {"dim": 2, "vertices": [["0","0"],["1","0"],["0","1"],["1","1"]]},
      {"dim": 2, "vertices": [["0","0"],["1","0"]]}
    ]
  })");
  CliResult r = cli({"volume-poly", vp});
  CHECK(r.code == 0);
  CHECK(hompoly_from_json(r.report["poly"]) ==
        make_hompoly(2, 2, {{{2, 0}, Rat(1)}, {{1, 1}, Rat(1)}}));
}

TEST_CASE("cli polymatroid reports rank vectors") {
  std::string gs = write_fixture("gs", R"({
    "m": 2,
    "W": "unit-cube",
    "bodies": [
      {"dim": 3, "vertices": [["0","0","0"],["1","0","0"]]},
      {"dim": 3, "vertices": [["0","0","0"],["0","1","0"]]},
      {"dim": 3, "vertices": [["0","0","0"],["1","0","0"],["0","1","0"]]}
    ]
  })");
  CliResult r = cli({"polymatroid", gs});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"]["holds"] == true);
  CHECK(r.report["ranks_by_mask"] == Json::parse("[0,1,1,2,2,2,2,2]"));
}

TEST_CASE("cli schur-af") {
  std::string inst = write_fixture("schur_af", R"({
    "tuples": [{
      "partition": {"parts": [1], "e": 1},
      "bodies": [{"dim": 3, "vertices":
        [["0","0","0"],["1","0","0"],["0","1","0"],["1","1","0"],
         ["0","0","1"],["1","0","1"],["0","1","1"],["1","1","1"]]}]
    }],
    "M": {"dim": 3, "vertices": [["0","0","0"],["1","0","0"]]},
    "N": {"dim": 3, "vertices": [["0","0","0"],["0","1","0"]]}
  })");
  CliResult r = cli({"schur-af", inst});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"]["holds"] == true);
  CHECK(r.report["verdict"]["margin"] == "1/36");
}

TEST_CASE("cli reproduce") {
  CliResult huh = cli({"reproduce", "huh-example"});
  CHECK(huh.code == 0);
  CHECK(huh.report["ok"] == true);
  CHECK(huh.report["lorentzian"]["holds"] == true);
  CHECK(huh.report["rkt_optimal"]["holds"] == false);
  CHECK(huh.report["rkt"]["holds"] == true);

  CliResult unknown = cli({"reproduce", "nothing"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown reproduction") != std::string::npos);
}

TEST_CASE("cli --out mirrors stdout") {
  std::string huh = write_fixture("huh_out", kHuhJson);
  std::string outfile = "tmp_io_report_out.json";
  CliResult r = cli({"check-lorentzian", huh, "--out", outfile});
  CHECK(r.code == 0);
  std::ifstream in(outfile);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);
}

TEST_CASE("cli fuzz smoke run is deterministic and quiet on success") {
  CliResult a = cli({"fuzz", "rkt", "--seed", "11", "--trials", "2"});
  CHECK(a.code == 0);
  CHECK(a.report["violations"] == 0);
  CHECK(a.report["checked"] == 2);
  CliResult b = cli({"fuzz", "rkt", "--seed", "11", "--trials", "2"});
  CHECK(a.report["corpus_digest"] == b.report["corpus_digest"]);

  CliResult bad = cli({"fuzz", "no-such-suite"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown fuzz suite") != std::string::npos);
}
