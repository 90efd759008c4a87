#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "reglab/cli.hpp"
#include "reglab/harness.hpp"
#include "reglab/json_io.hpp"
#include "support.hpp"

using namespace reglab;
using namespace testing_support;

namespace {

const std::string kGolden = GOLDEN_DIR;

std::string golden(const std::string& name) { return kGolden + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("hilbert on five collinear points") {
  const auto r = run({"hilbert", "--scheme", golden("five_collinear.json"), "--max-degree", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("hilbert_five_collinear.out")));
  // rank oracle per degree
  const auto phi = parse(r)["phi"];
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(phi[k] == oracle_phi_points({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}}, k));
}

TEST_CASE("bounds golden") {
  const auto r = run({"bounds", "--dim", "5", "--degree", "12", "--codim", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("bounds_5_12_4.out")));
  // (d-e+1)+10 and min{e,n} d - n + 1
  CHECK(parse(r)["paper"] == (12 - 4 + 1) + 10);
  CHECK(parse(r)["bel"] == 4 * 12 - 5 + 1);
  const auto q = parse(run({"bounds", "--dim", "5", "--degree", "20", "--codim", "3", "--no-quadric"}));
  CHECK(q["paper"] == 15);
  const auto e = parse(run({"bounds", "--dim", "5", "--degree", "20", "--codim", "3", "--quadric", "--explain"}));
  CHECK(e["paper"] == 24);
  CHECK(e.contains("source"));
  CHECK(run({"bounds", "--dim", "5", "--degree", "20", "--codim", "3", "--quadric", "--no-quadric"}).code == 2);
}

TEST_CASE("verify reports") {
  const auto r = run({"verify", "--suite", "lemma2_6", "--trials", "16", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("verify_lemma2_6_16_1.out")));
  CHECK(run({"verify", "--suite", "lemma2_6", "--trials", "16", "--seed", "1", "--jobs", "4"}).out == r.out);
  const auto p = run({"verify", "--suite", "prop1_2", "--trials", "100", "--seed", "42"});
  CHECK(p.code == 0);
  CHECK(parse(p)["passed"] == true);
  CHECK_FALSE(parse(p).contains("wall_ms"));
  CHECK(parse(run({"verify", "--suite", "flatness", "--trials", "3", "--timing"})).contains("wall_ms"));
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("property violations exit with 1") {
  const auto r = run({"normality", "--scheme", golden("five_collinear.json"), "--degree", "3"});
  CHECK(r.code == 1);
  CHECK(parse(r)["k_normal"] == false);
  CHECK(run({"normality", "--scheme", golden("five_collinear.json"), "--degree", "4"}).code == 0);
  const auto s = run({"separate", "--scheme", golden("five_collinear.json"), "--recipe", golden("t1_powers.json"),
                      "--degree", "3"});
  CHECK(s.code == 1);
  CHECK(parse(s)["separates"] == false);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hilbert", "--scheme", golden("five_collinear.json"), "--bogus"}).code == 2);
  const auto bad = run({"hilbert", "--scheme", golden("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"hilbert", "--scheme", golden("does_not_exist.json")}).code == 2);
  CHECK(run({"hilbert", "--scheme", golden("five_collinear.json"), "--field", "fp:12"}).code == 2);
  CHECK(run({"curve-section", "--curve", golden("twisted_cubic.json"), "--subspace", golden("cubic_center.json")})
            .code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumeration cap from flag and environment") {
  CHECK(run({"invariant-t", "--scheme", golden("five_collinear.json"), "--cap", "3"}).code == 2);
  setenv("REGLAB_CAP", "3", 1);
  CHECK(run({"invariant-t", "--scheme", golden("five_collinear.json")}).code == 2);
  CHECK(run({"invariant-t", "--scheme", golden("five_collinear.json"), "--cap", "8"}).code == 0);
  unsetenv("REGLAB_CAP");
  const auto r = run({"invariant-t", "--scheme", golden("five_collinear.json")});
  CHECK(r.code == 0);
  CHECK(parse(r)["t"] == 1);
}

TEST_CASE("separators and recipes") {
  const auto l = run({"lemma26", "--config", golden("separator_case2.json")});
  CHECK(l.code == 0);
  CHECK(parse(l)["rank"] == 6);
  CHECK(parse(l)["forms"].size() == 6);
  const auto s = run({"separate", "--scheme", golden("five_collinear.json"), "--recipe", golden("t1_powers.json"),
                      "--degree", "4"});
  CHECK(s.code == 0);
  CHECK(parse(s)["separates"] == true);
}

TEST_CASE("fibers and curves") {
  const auto c = parse(run({"classify-fiber", "--scheme", golden("five_collinear.json"), "--n", "5"}));
  CHECK(c["label"] == "1.i");
  CHECK(c["predicted"] == 4);
  CHECK(c["minimal_normal_degree"] == 4);
  const auto p = parse(run({"project", "--scheme", golden("four_points.json"), "--center", golden("origin_center.json")}));
  CHECK(p["fibers"].size() == 2);
  CHECK(p["yk"]["2"] == 2);
  const auto f = run({"curve-fiber", "--curve", golden("twisted_cubic.json"), "--center", golden("cubic_center.json"),
                      "--y", "1,8"});
  CHECK(f.code == 0);
  CHECK(parse(f)["total"] == 3);
  CHECK(parse(f)["scheme"]["germs"][0]["point"] == Json::array({"1", "2", "4", "8"}));
  const auto sec = parse(run({"curve-section", "--curve", golden("twisted_cubic.json"), "--subspace", golden("plane.json")}));
  CHECK(sec["length"] == 3);
  CHECK(sec["holds"] == true);
}

TEST_CASE("scheme files round-trip") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(s);
    GeneratorSpec spec;
    spec.ambient = 1 + s % 4;
    spec.degree = 1 + s % 7;
    spec.max_germ_length = 3;
    std::size_t redraws = 0;
    const FiniteScheme x = gen_scheme(spec, rng, redraws);
    for (Field f : {Field::rationals(), Field::prime(10007)}) {
      FiniteScheme y = f.is_rational() ? x : x.in_field(f);
      const Json j = scheme_to_json(y);
      const FiniteScheme back = scheme_from_json(Json::parse(j.dump()));
      CHECK(scheme_to_json(back).dump() == j.dump());
      CHECK(back.degree() == y.degree());
      CHECK(back.field() == y.field());
    }
  }
}

TEST_CASE("identical inputs give byte-identical output") {
  const std::vector<std::string> args{"regularity", "--scheme", golden("four_points.json")};
  CHECK(run(args).out == run(args).out);
  // four points, no three collinear: 2-normal, not 1-normal
  CHECK(parse(run(args))["regularity"] == 3);
}
