#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qcr/construct.hpp"
#include "qcr/state_file.hpp"

using namespace qcr;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result qcr_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcr");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qcr_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

struct ScopedEnv {
  explicit ScopedEnv(const std::string& value) { setenv(cli::kConfigEnv, value.c_str(), 1); }
  ~ScopedEnv() { unsetenv(cli::kConfigEnv); }
};

}  // namespace

TEST_CASE("construct example writes the fixture") {
  const auto path = tmp("example.json");
  const auto r = qcr_run({"construct", "example", "--out", path});
  REQUIRE(r.code == cli::kExitOk);
  const QuantumState s = read_state_file(path);
  CHECK(s.vector() == build_example_state().vector());
  CHECK(json::parse(r.out)["format"] == "qcr-construct-report");
}

TEST_CASE("verify exit codes and reports") {
  const auto good = tmp("ghz.json");
  REQUIRE(qcr_run({"construct", "ghz", "--d", "2", "--n", "3", "--out", good}).code == 0);
  const auto r = qcr_run({"verify", good});
  CHECK(r.code == cli::kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["verdict"] == true);
  CHECK(doc["failing"] == "none");

  const auto cc = tmp("classical.json");
  REQUIRE(qcr_run({"construct", "classical", "--d", "2", "--n", "1", "--out", cc}).code == 0);
  const auto bad = qcr_run({"verify", cc});
  CHECK(bad.code == cli::kExitVerifyFailed);
  const json bdoc = json::parse(bad.out);
  CHECK(bdoc["failing"] == "condition-ii");
  CHECK(std::abs(bdoc["condition_ii"]["max_distance"].get<double>() - 2.0) <= 1e-9);

  const auto prod = tmp("product.json");
  REQUIRE(qcr_run({"construct", "product", "--d", "2", "--n", "2", "--out", prod}).code == 0);
  const auto p = qcr_run({"verify", prod, "--report", "text"});
  CHECK(p.code == cli::kExitVerifyFailed);
  CHECK(p.out.find("FAIL") != std::string::npos);
}

TEST_CASE("private and twisted families") {
  const auto priv = tmp("private.json");
  CHECK(qcr_run({"--seed", "3", "construct", "private", "--d", "3", "--shields", "2,2", "--sigma", "random", "--twist",
                 "random", "--out", priv})
            .code == 0);
  CHECK(qcr_run({"verify", priv}).code == 0);
  CHECK(qcr_run({"construct", "private", "--d", "3", "--shields", "2,2", "--twist", "random", "--out", priv}).code ==
        cli::kExitUsage);
  const auto tw = tmp("twisted.json");
  REQUIRE(qcr_run({"construct", "twisted", "--d", "2", "--n", "2", "--shields", "2,2,2", "--twist", "example", "--out",
                   tw})
              .code == 0);
  CHECK(read_state_file(tw).vector() == build_example_state().vector());
}

TEST_CASE("reduce writes one verified file per branch") {
  const auto in = tmp("reduce_in.json");
  REQUIRE(qcr_run({"construct", "ghz", "--d", "3", "--n", "2", "--out", in}).code == 0);
  const auto prefix = tmp("reduced");
  const auto r = qcr_run({"--out", prefix, "reduce", in, "--keep", "A1"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["branches"].size() == 3);
  for (const auto& b : doc["branches"]) {
    CHECK(b["verdict"] == true);
    CHECK(fs::exists(b["file"].get<std::string>()));
  }
  const auto one = qcr_run({"--out", prefix, "reduce", in, "--keep", "A2", "--branch", "2"});
  CHECK(json::parse(one.out)["branches"].size() == 1);
  CHECK(qcr_run({"--out", prefix, "reduce", in, "--keep", "A1,A2"}).code == cli::kExitUsage);
  CHECK(qcr_run({"--out", prefix, "reduce", in, "--keep", "A7"}).code == cli::kExitUsage);
  CHECK(qcr_run({"--out", prefix, "reduce", in, "--keep", "A1", "--sample"}).code == cli::kExitUsage);
  CHECK(json::parse(qcr_run({"--seed", "1", "--out", prefix, "reduce", in, "--keep", "A1", "--sample"}).out)["branches"]
            .size() == 1);
}

TEST_CASE("compose and ppt") {
  const auto a = tmp("me.json");
  REQUIRE(qcr_run({"construct", "private", "--d", "2", "--out", a}).code == 0);
  const auto out = tmp("composed.json");
  const auto r = qcr_run({"--out", out, "compose", a, a});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["format"] == "qcr-compose-report");
  CHECK(qcr_run({"verify", out}).code == 0);

  const auto p = qcr_run({"ppt", a, "--cuts", "dealer"});
  CHECK(p.code == cli::kExitNotPpt);
  CHECK(std::abs(json::parse(p.out)["cuts"][0]["min_eigenvalue"].get<double>() + 0.5) < 1e-10);
  const auto prod = tmp("ppt_product.json");
  REQUIRE(qcr_run({"construct", "product", "--d", "2", "--n", "2", "--out", prod}).code == 0);
  CHECK(qcr_run({"ppt", prod, "--cuts", "all"}).code == 0);
  CHECK(qcr_run({"ppt", a, "--cuts", "explicit", "--side-one", "D,D~"}).code == cli::kExitNotPpt);
  CHECK(qcr_run({"ppt", a, "--cuts", "explicit", "--side-one", "D,Q"}).code == cli::kExitUsage);

  const auto cc = tmp("classical_for_compose.json");
  REQUIRE(qcr_run({"construct", "classical", "--d", "2", "--n", "1", "--out", cc}).code == 0);
  CHECK(qcr_run({"--out", out, "compose", cc, a}).code == cli::kExitVerifyFailed);
  fs::remove(out);
  CHECK(qcr_run({"--out", out, "compose", cc, a, "--force"}).code == cli::kExitVerifyFailed);
  CHECK(fs::exists(out));
}

TEST_CASE("distance and measure") {
  const auto a = tmp("dist_a.json");
  const auto b = tmp("dist_b.json");
  REQUIRE(qcr_run({"construct", "private", "--d", "2", "--out", a}).code == 0);
  REQUIRE(qcr_run({"construct", "classical", "--d", "2", "--n", "1", "--out", b}).code == 0);
  const auto r = qcr_run({"distance", a, b});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["trace_norm"].get<double>() == doctest::Approx(1.0));
  const auto m = qcr_run({"measure", a});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["outcomes"].size() == 2);
}

TEST_CASE("error exit codes") {
  CHECK(qcr_run({}).code == cli::kExitUsage);
  CHECK(qcr_run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(qcr_run({"verify", tmp("missing.json")}).code == cli::kExitNoInput);
  const auto junk = tmp("junk.json");
  std::ofstream(junk) << "[1, 2";
  CHECK(qcr_run({"verify", junk}).code == cli::kExitDataError);
  CHECK(qcr_run({"construct", "example"}).code == cli::kExitUsage);
  CHECK(qcr_run({"construct", "example", "--out", "/nonexistent-dir/x.json"}).code == cli::kExitCantCreate);
  CHECK(qcr_run({"--cap", "16", "construct", "example", "--out", tmp("capped.json")}).code == cli::kExitUsage);
  CHECK(qcr_run({"--report", "xml", "construct", "example", "--out", tmp("x.json")}).code == cli::kExitUsage);
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto cfg = tmp("config.json");
  std::ofstream(cfg) << R"({"tol": 1e-9, "cap": 16, "seed": 4, "report": "text"})";
  ScopedEnv env(cfg);
  const auto path = tmp("cfg_example.json");
  CHECK(qcr_run({"construct", "example", "--out", path}).code == cli::kExitUsage);
  REQUIRE(qcr_run({"--cap", "4096", "construct", "example", "--out", path}).code == 0);
  const auto v = qcr_run({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("verdict: PASS", 0) == 0);
  CHECK(qcr_run({"--cap", "4096", "construct", "private", "--d", "2", "--twist", "random", "--out", path}).code == 0);
}

TEST_CASE("broken config files") {
  {
    ScopedEnv env(tmp("no-such-config.json"));
    CHECK(qcr_run({"construct", "example", "--out", tmp("e.json")}).code == cli::kExitNoInput);
  }
  const auto cfg = tmp("bad_config.json");
  std::ofstream(cfg) << R"({"tol": "small"})";
  ScopedEnv env(cfg);
  CHECK(qcr_run({"construct", "example", "--out", tmp("e.json")}).code == cli::kExitDataError);
}

TEST_CASE("installed binary runs") {
  const auto path = tmp("binary_example.json");
  const std::string cmd = std::string(QCR_TOOL_PATH) + " construct example --out " + path + " > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string verify = std::string(QCR_TOOL_PATH) + " verify " + path + " > /dev/null";
  CHECK(std::system(verify.c_str()) == 0);
}
