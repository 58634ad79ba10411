#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "nilrep/cli.hpp"

using namespace nilrep;
using Catch::Matchers::ContainsSubstring;

namespace {

namespace fs = std::filesystem;

std::string catalog(const std::string& name) {
  return std::string(NILREP_CATALOG_DIR) + "/" + name;
}

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(const JobConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Fresh per-test scratch directory.
fs::path scratch(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("nilrep_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli validate accepts the catalog and rejects a planted failure") {
  JobConfig cfg;
  cfg.command = "validate";
  cfg.input = catalog("heisenberg3.json");
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK(result.out == "ok\n");

  cfg.json = true;
  result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("\"ok\": true"));

  // Planted Jacobi failure: [x,y] = z together with [x,z] = x.
  const fs::path dir = scratch("validate");
  LieAlgebra bad(3, "bad", {"x", "y", "z"});
  bad.set_bracket(0, 1, {{2, Rational(1)}});
  bad.set_bracket(0, 2, {{0, Rational(1)}});
  const std::string bad_path = (dir / "bad.json").string();
  save_json_file(bad_path, algebra_to_json(bad));

  cfg.json = false;
  cfg.input = bad_path;
  result = run_cli(cfg);
  CHECK(result.code == 1);
  CHECK_THAT(result.out, ContainsSubstring("jacobi violation"));
  CHECK_THAT(result.out, ContainsSubstring("(x, y, z)"));
  fs::remove_all(dir);
}

TEST_CASE("cli validate exit codes distinguish parse errors") {
  JobConfig cfg;
  cfg.command = "validate";
  cfg.input = "/nonexistent/nowhere.json";
  CHECK(run_cli(cfg).code == 2);

  const fs::path dir = scratch("parse");
  const std::string path = (dir / "broken.json").string();
  std::ofstream(path) << "{ not json";
  cfg.input = path;
  RunResult result = run_cli(cfg);
  CHECK(result.code == 2);
  CHECK_THAT(result.err, ContainsSubstring("parse error"));

  cfg.command = "no-such-command";
  CHECK(run_cli(cfg).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli analyze reports structure") {
  JobConfig cfg;
  cfg.command = "analyze";
  cfg.input = catalog("heisenberg3.json");
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("dim: 3"));
  CHECK_THAT(result.out, ContainsSubstring("lower central series dims: 3 1 0"));
  CHECK_THAT(result.out, ContainsSubstring("class: 2"));
  CHECK_THAT(result.out, ContainsSubstring("center dim: 1"));
  CHECK_THAT(result.out, ContainsSubstring("killing radical dim: 3"));

  cfg.input = catalog("sl2.json");
  result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("class: not nilpotent"));
  CHECK_THAT(result.out, ContainsSubstring("killing radical dim: 0"));

  cfg.input = catalog("heisenberg3.json");
  cfg.ideal = "center";
  result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("filtration dims: 3 1 0"));
  CHECK_THAT(result.out, ContainsSubstring("filtration weights: 0 0 1"));

  cfg.json = true;
  result = run_cli(cfg);
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  CHECK(j["class"] == 2);
  CHECK(j["lcs_dims"] == Json::array({3, 1, 0}));
  CHECK(j["filtration"]["weights"] == Json::array({0, 0, 1}));
}

TEST_CASE("cli analyze rejects a non-ideal selector span") {
  JobConfig cfg;
  cfg.command = "analyze";
  cfg.input = catalog("heisenberg3.json");
  cfg.ideal = "span:0";  // span{x} is not an ideal of h3
  RunResult result = run_cli(cfg);
  CHECK(result.code == 1);
  CHECK_THAT(result.err, ContainsSubstring("not an ideal"));

  cfg.ideal = "span:2";  // the center, via indices
  result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("filtration weights: 0 0 1"));

  cfg.ideal = "span:9";
  CHECK(run_cli(cfg).code == 1);

  cfg.ideal = "span:a,b";
  CHECK(run_cli(cfg).code == 2);

  cfg.ideal = "everything";
  CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("cli build-rep writes a verifiable representation") {
  const fs::path dir = scratch("build");
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = catalog("heisenberg3.json");
  cfg.output = (dir / "h3.rep.json").string();
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("degree: 7"));
  CHECK_THAT(result.out, ContainsSubstring("faithful: true"));
  CHECK_THAT(result.out, ContainsSubstring("prop_bound: 10"));
  CHECK_THAT(result.out, ContainsSubstring("theorem_bound: 10"));

  JobConfig verify;
  verify.command = "verify-rep";
  verify.input = catalog("heisenberg3.json");
  verify.rep_file = cfg.output;
  RunResult verified = run_cli(verify);
  CHECK(verified.code == 0);
  CHECK_THAT(verified.out, ContainsSubstring("homomorphism: ok"));
  CHECK_THAT(verified.out, ContainsSubstring("faithful: true"));
  fs::remove_all(dir);
}

TEST_CASE("cli build-rep output files are byte-identical across runs") {
  const fs::path dir = scratch("determinism");
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = catalog("solvable5_p0.json");
  cfg.output = (dir / "a.json").string();
  REQUIRE(run_cli(cfg).code == 0);
  cfg.output = (dir / "b.json").string();
  REQUIRE(run_cli(cfg).code == 0);
  CHECK(slurp((dir / "a.json").string()) == slurp((dir / "b.json").string()));
  fs::remove_all(dir);
}

TEST_CASE("cli build-rep round-trips every catalog algebra") {
  const fs::path dir = scratch("roundtrip");
  const char* names[] = {"abelian1.json",  "abelian2.json",        "abelian3.json",
                         "abelian4.json",  "heisenberg3.json",     "heisenberg5.json",
                         "filiform4.json", "filiform5.json",       "filiform6.json",
                         "filiform7.json", "filiform8.json",       "filiform9.json",
                         "solvable2.json", "sl2.json",             "sl2_plus_center.json",
                         "solvable5_p0.json"};
  for (const char* name : names) {
    INFO(name);
    JobConfig cfg;
    cfg.command = "build-rep";
    cfg.input = catalog(name);
    cfg.output = (dir / name).string();
    RunResult built = run_cli(cfg);
    REQUIRE(built.code == 0);
    CHECK_THAT(built.out, ContainsSubstring("faithful: true"));

    JobConfig verify;
    verify.command = "verify-rep";
    verify.input = cfg.input;
    verify.rep_file = cfg.output;
    CHECK(run_cli(verify).code == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("cli build-rep below the threshold loses faithfulness") {
  const fs::path dir = scratch("threshold");
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = catalog("heisenberg3.json");
  cfg.output = (dir / "h3_low.rep.json").string();
  cfg.k1 = 2;  // k1 = c(m), one below the default
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("faithful: false"));

  JobConfig verify;
  verify.command = "verify-rep";
  verify.input = catalog("heisenberg3.json");
  verify.rep_file = cfg.output;
  RunResult verified = run_cli(verify);
  CHECK(verified.code == 1);
  CHECK_THAT(verified.out, ContainsSubstring("faithful: false"));
  CHECK_THAT(verified.out, ContainsSubstring("kernel dim: 1"));

  cfg.k1 = 0;
  CHECK(run_cli(cfg).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("cli build-rep ideal selector overrides h") {
  const fs::path dir = scratch("selector");
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = catalog("heisenberg5.json");
  cfg.output = (dir / "h5.rep.json").string();
  cfg.ideal = "center";
  cfg.json = true;
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  CHECK(j["achieved_degree"] == 16);
  CHECK(j["k2"] == 2);
  CHECK(j["faithful"] == true);
  CHECK(j["class_h"] == 1);
  fs::remove_all(dir);
}

TEST_CASE("cli build-rep needs a decomposition for non-nilpotent input") {
  const fs::path dir = scratch("nodec");
  const std::string path = (dir / "sl2_plain.json").string();
  save_json_file(path, algebra_to_json(nt::sl2()));
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = path;
  cfg.output = (dir / "out.json").string();
  RunResult result = run_cli(cfg);
  CHECK(result.code == 1);
  CHECK_THAT(result.err, ContainsSubstring("not nilpotent"));
  fs::remove_all(dir);
}

TEST_CASE("cli verify-rep catches tampering and mismatches") {
  const fs::path dir = scratch("tamper");
  JobConfig cfg;
  cfg.command = "build-rep";
  cfg.input = catalog("heisenberg3.json");
  cfg.output = (dir / "h3.rep.json").string();
  REQUIRE(run_cli(cfg).code == 0);

  Json j = load_json_file(cfg.output);
  j["matrices"]["x"][0][0] = "5";
  const std::string tampered = (dir / "tampered.json").string();
  save_json_file(tampered, j);

  JobConfig verify;
  verify.command = "verify-rep";
  verify.input = catalog("heisenberg3.json");
  verify.rep_file = tampered;
  RunResult result = run_cli(verify);
  CHECK(result.code == 1);
  CHECK_THAT(result.out, ContainsSubstring("homomorphism: fails"));

  verify.input = catalog("abelian3.json");
  verify.rep_file = cfg.output;
  result = run_cli(verify);
  CHECK(result.code == 1);
  CHECK_THAT(result.err, ContainsSubstring("built for"));
  fs::remove_all(dir);
}

TEST_CASE("cli bound calculator") {
  JobConfig cfg;
  cfg.command = "bound";
  cfg.d = 3;
  cfg.n = 3;
  cfg.r = 3;
  cfg.e1 = 2;
  cfg.e2 = 0;
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("theorem_bound: 10"));
  CHECK_THAT(result.out, ContainsSubstring("prop_bound: 10"));

  cfg.birkhoff_class = 2;
  cfg.json = true;
  result = run_cli(cfg);
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  CHECK(j["theorem_bound"] == "10");
  CHECK(j["birkhoff"] == "13");

  cfg.json = false;
  cfg.r = 1;  // violates n <= r
  CHECK(run_cli(cfg).code == 1);

  JobConfig missing;
  missing.command = "bound";
  missing.d = 3;
  CHECK(run_cli(missing).code == 2);
}

TEST_CASE("cli denumerant") {
  JobConfig cfg;
  cfg.command = "denumerant";
  cfg.t = 4;
  cfg.parts = {1, 2, 3};
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("denumerant: 4"));
  CHECK_THAT(result.out, ContainsSubstring("bound: 20"));

  cfg.json = true;
  result = run_cli(cfg);
  const Json j = Json::parse(result.out);
  CHECK(j["denumerant"] == "4");
  CHECK(j["bound"] == "20");

  cfg.parts = {1, 0, 2};
  CHECK(run_cli(cfg).code == 1);

  cfg.parts.clear();
  CHECK(run_cli(cfg).code == 2);

  JobConfig missing;
  missing.command = "denumerant";
  missing.parts = {1, 2};
  CHECK(run_cli(missing).code == 2);
}

TEST_CASE("cli nil-defect") {
  JobConfig cfg;
  cfg.command = "nil-defect";
  cfg.input = catalog("filiform6.json");
  RunResult result = run_cli(cfg);
  CHECK(result.code == 0);
  CHECK_THAT(result.out, ContainsSubstring("nil defect upper bound: 2"));
  CHECK_THAT(result.out, ContainsSubstring("witness ideal dim: 5"));

  cfg.input = catalog("sl2.json");
  cfg.json = true;
  result = run_cli(cfg);
  CHECK(result.code == 0);
  Json j = Json::parse(result.out);
  CHECK(j["radical_dim"] == 0);
  CHECK(j["epsilon"] == 0);

  cfg.input = catalog("abelian3.json");
  result = run_cli(cfg);
  j = Json::parse(result.out);
  CHECK(j["epsilon"] == 1);
  CHECK(j["witness_dim"] == 3);
}
