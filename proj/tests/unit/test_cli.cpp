#include "doctest.h"
#include "semihom/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace semihom;
using namespace semihom::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("semihom_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("homology command") {
  const Result r = call({"homology", "--monoid", "i:2", "--module", "trivial-ke", "--field", "q", "--max-degree", "2"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("betti: [3, 0, 0]") != std::string::npos);

  const Result g = call({"homology", "--monoid", "z:2", "--module", "trivial", "--field", "fp:2", "--max-degree", "3",
                         "--format", "json"});
  CHECK(Json::parse(g.out)["betti"] == Json({1, 1, 1, 1}));
}

TEST_CASE("steinberg verification command") {
  const Result r = call({"verify", "steinberg-homology", "--groupoid", "pair:2", "--module", "regular", "--max-degree",
                         "2", "--format", "json"});
  CHECK(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["lhs"] == Json({1, 0, 0}));
  CHECK(j["rhs"] == Json({1, 0, 0}));
}

TEST_CASE("error paths") {
  const std::string bad = temp_file("bad.json", R"({"size":3,"table":[[0,1,2],[1,0,0],[2,0,0]],"unit":0})");
  const Result r = call({"homology", "--monoid", "file:" + bad, "--max-degree", "1"});
  CHECK(r.code == kInputError);
  CHECK(r.err.find("not associative at (1,1,2)") != std::string::npos);

  const std::string broken = temp_file("broken.json", "{\"table\": [[0]\n");
  const Result p = call({"homology", "--monoid", "file:" + broken});
  CHECK(p.code == kInputError);
  CHECK(p.err.find("line 2") != std::string::npos);

  CHECK(call({"homology", "--monoid", "nope:3"}).code == kInputError);
  CHECK(call({"verify", "no-such-kind"}).code == kInputError);
  CHECK(call({"homology"}).code == kInputError);
  CHECK(call({"homology", "--monoid", "z:2", "--max-degree", "99"}).code == kInputError);
  CHECK(call({"steinberg", "--groupoid", "pair:5"}).code == kInputError);
  // compatible only on E-unitary monoids here
  CHECK(call({"verify", "phi", "--action", "conj:i:2"}).code == kInputError);
  CHECK(call({"verify", "collapse-homology", "--action", "trivial:z:1", "--algebra", "dual"}).code == kInputError);
}

TEST_CASE("file inputs") {
  const std::string monoid = temp_file("z2.json", R"({"size":2,"table":[[0,1],[1,0]],"unit":0,"names":["1","g"]})");
  const std::string module =
      temp_file("sign.json", R"({"monoid_ref":"z:2","field":"q","dim":1,"act":[[[1]],[[-1]]],"side":"left"})");
  const Result r = call({"homology", "--monoid", "file:" + monoid, "--module", "file:" + module, "--format", "json"});
  REQUIRE(r.code == kOk);
  CHECK(Json::parse(r.out)["betti"] == Json({0, 0, 0}));

  const std::string groupoid = temp_file(
      "pair2.json",
      R"({"objects":2,"arrows":[{"src":0,"rng":0},{"src":1,"rng":0},{"src":0,"rng":1},{"src":1,"rng":1}],)"
      R"("comp":[[0,0,0],[0,1,1],[1,2,0],[1,3,1],[2,0,2],[2,1,3],[3,2,2],[3,3,3]],"inv":[0,2,1,3]})");
  const Result s = call({"steinberg", "--groupoid", "file:" + groupoid, "--format", "json"});
  REQUIRE(s.code == kOk);
  CHECK(Json::parse(s.out)["bisections"] == 7);

  const std::string action = temp_file(
      "i1.json", R"({"monoid_ref":"i:1","algebra_ref":"diag:2","one":[[1,0],[1,1]],)"
                 R"("theta":[[[1,0],[0,0]],[[1,0],[0,1]]]})");
  const Result c = call({"crossed-product", "--action", "file:" + action, "--format", "json"});
  REQUIRE(c.code == kOk);
  CHECK(Json::parse(c.out)["dim"] == 2);

  const std::string swap = temp_file(
      "swap.json", R"({"dim":2,"left":[[[1,0],[0,1]]],"right":[[[1,0],[0,1]]]})");
  const Result m = call({"verify", "collapse-homology", "--action", "trivial:z:2", "--algebra", "k", "--module",
                         "file:" + swap, "--format", "json"});
  CHECK(m.code == kInputError);  // wrong number of matrices for the crossed product
}

TEST_CASE("json round trip of exact values") {
  const FieldSpec q = FieldSpec::rationals(), f7 = FieldSpec::prime(7);
  for (const Scalar& s : {Scalar::parse(q, "-3/7"), Scalar::parse(q, "12"), Scalar(0)})
    CHECK(scalar_from_json(Json::parse(to_json(s).dump()), q) == s);
  const Scalar r = Scalar::in(f7, 5);
  CHECK(to_json(r) == Json(5));
  CHECK(scalar_from_json(Json::parse(to_json(r).dump()), f7) == r);

  const Result c = call({"crossed-product", "--action", "conj:chain:2*z:2", "--format", "json"});
  REQUIRE(c.code == kOk);
  const crossprod::Algebra back = algebra_from_json(Json::parse(c.out)["algebra"], q);
  const auto expected = crossprod::crossed_product(crossprod::conjugation_action(parse_monoid("chain:2*z:2"), q));
  CHECK(back == expected.algebra);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> jobs = {
      {"homology", "--monoid", "chain:2*z:2", "--module", "regular", "--max-degree", "2"},
      {"crossed-product", "--action", "conj:z:3", "--format", "json"},
      {"verify", "sigma-sums", "--action", "conj:chain:2*z:2", "--seed", "11"},
      {"steinberg", "--groupoid", "pair:2+discrete:1", "--format", "json"},
  };
  for (const auto& job : jobs) {
    const Result a = call(job), b = call(job);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("timing goes to stderr only") {
  const Result plain = call({"steinberg", "--groupoid", "pair:2"});
  const Result timed = call({"steinberg", "--groupoid", "pair:2", "--timing"});
  CHECK(plain.out == timed.out);
  CHECK(timed.err.find("time_ms") != std::string::npos);
}
