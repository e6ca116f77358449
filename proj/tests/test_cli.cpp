#include "cochain_forge/cli.hpp"
#include "cochain_forge/json_io.hpp"

#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace testing;
using cf::AlgebraSpec;
using cf::e;
using cf::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cochain-forge");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cf::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(CF_DATA_DIR) + "/" + name; }

class TempDir {
public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("cochain-forge-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string &name, const std::string &content = {}) const {
    auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

private:
  fs::path path_;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("h2 example on the trivial Witt module") {
  auto r = cli({"h2", "--algebra", "witt", "--coeffs", "trivial", "--degree", "0", "--radius", "8",
                "--margin", "4"});
  CHECK(r.code == cf::exit_code::verified);
  CHECK(r.out.find("h2_dim 1") != std::string::npos);
  auto j = cli({"h2", "--algebra", "witt", "--coeffs", "trivial", "--radius", "8", "--format",
                "json"});
  CHECK(Json::parse(j.out)["h2_dim"] == 1);
}

TEST_CASE("trivialize example on the Virasoro cocycle") {
  auto r = cli({"trivialize", "--algebra", "virasoro", "--in", data("omega_r8.json"), "--radius",
                "8", "--format", "json"});
  REQUIRE(r.code == cf::exit_code::verified);
  Json j = Json::parse(r.out);
  CHECK(j["certified_radius"] == 8);
  auto phi = cf::one_cochain_from_json(j["phi"]).cochain;
  CHECK(phi(cf::central_t()) == T(q(-1)));
  for (std::int64_t i = -8; i <= 8; ++i) CHECK(phi(e(i)).is_zero());
}

TEST_CASE("check-cocycle example on the zero cochain") {
  auto r = cli({"check-cocycle", "--in", data("zero_r8.json"), "--format", "json"});
  CHECK(r.code == cf::exit_code::verified);
  Json j = Json::parse(r.out);
  CHECK(j["residuals"].empty());
  CHECK(j["certified_radius"] == 8);
}

TEST_CASE("jacobi on built-in and custom algebras") {
  CHECK(cli({"jacobi", "--algebra", "virasoro", "--radius", "6"}).code == cf::exit_code::verified);
  CHECK(cli({"jacobi", "--algebra", data("sl2.json")}).code == cf::exit_code::verified);
  TempDir dir;
  // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = e3.
  auto broken = dir.file("broken.json", R"({"kind":"custom","basis":["e:0","e:1","e:2","e:3"],
    "brackets":[
      {"i":"e:0","j":"e:1","value":{"terms":[{"idx":"e:1","coeff":"1"}]}},
      {"i":"e:0","j":"e:2","value":{"terms":[{"idx":"e:2","coeff":"1"}]}},
      {"i":"e:0","j":"e:3","value":{"terms":[{"idx":"e:3","coeff":"1"}]}},
      {"i":"e:1","j":"e:2","value":{"terms":[{"idx":"e:3","coeff":"1"}]}}]})");
  CHECK(cli({"jacobi", "--algebra", broken}).code == cf::exit_code::failed);
}

TEST_CASE("reports are deterministic") {
  for (const std::string alg : {"witt", "virasoro"}) {
    auto a = cli({"random-coboundary", "--algebra", alg, "--radius", "9", "--seed", "42"});
    auto b = cli({"random-coboundary", "--algebra", alg, "--radius", "9", "--seed", "42"});
    auto c = cli({"random-coboundary", "--algebra", alg, "--radius", "9", "--seed", "43"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
  }
  std::vector<std::string> h2 = {"h2", "--algebra", "virasoro", "--radius", "5", "--format", "json"};
  CHECK(cli(h2).out == cli(h2).out);
  std::vector<std::string> st = {"selftest", "--criteria", "1,2", "--samples", "5", "--format",
                                 "json"};
  auto s1 = cli(st);
  CHECK(s1.code == 0);
  CHECK(s1.out == cli(st).out);
}

TEST_CASE("random coboundaries always trivialize") {
  TempDir dir;
  for (const std::string alg : {"witt", "virasoro"}) {
    for (int seed = 1; seed <= 8; ++seed) {
      auto psi = dir.file(alg + std::to_string(seed) + ".json");
      auto phi = dir.file(alg + std::to_string(seed) + "-phi.json");
      CAPTURE(alg);
      CAPTURE(seed);
      REQUIRE(cli({"random-coboundary", "--algebra", alg, "--radius", "10", "--seed",
                   std::to_string(seed), "--out", psi, "--phi-out", phi})
                  .code == 0);
      auto r = cli({"trivialize", "--in", psi, "--format", "json"});
      CHECK(r.code == cf::exit_code::verified);
      CHECK(cli({"check-cocycle", "--in", psi}).code == cf::exit_code::verified);
      CHECK(cli({"is-coboundary", "--in", psi}).code == cf::exit_code::verified);
      auto phi0 = cf::one_cochain_from_json(cf::read_json_file(phi)).cochain;
      CHECK(phi0.window().radius == 10);
    }
  }
}

TEST_CASE("explicit degrees for random coboundaries") {
  auto r = cli({"random-coboundary", "--algebra", "witt", "--radius", "6", "--degrees", "2"});
  REQUIRE(r.code == 0);
  auto psi = cf::two_cochain_from_json(Json::parse(r.out)).cochain;
  CHECK(cf::homogeneous_degree(psi) == 2);
}

TEST_CASE("malformed input exits 2") {
  TempDir dir;
  auto bad = dir.file("bad.json", "{\n  \"algebra\": \"witt\",\n  \"radius\": 8,,\n}");
  auto r = cli({"check-cocycle", "--in", bad});
  CHECK(r.code == cf::exit_code::malformed);
  CHECK(r.err.find("bad.json:3:") != std::string::npos);
  CHECK(cli({"check-cocycle", "--in", dir.file("missing.json")}).code == cf::exit_code::malformed);
  CHECK(cli({"frobnicate"}).code == cf::exit_code::malformed);
  CHECK(cli({}).code == cf::exit_code::malformed);
  CHECK(cli({"h2", "--algebra", "witt"}).code == cf::exit_code::malformed);
  CHECK(cli({"h2", "--algebra", "witt", "--radius", "8", "--margin", "3"}).code ==
        cf::exit_code::malformed);
  CHECK(cli({"h2", "--algebra", "witt", "--radius", "8", "--coeffs", "dual"}).code ==
        cf::exit_code::malformed);
  CHECK(cli({"trivialize", "--in", data("zero_r8.json"), "--radius", "2"}).code ==
        cf::exit_code::malformed);
  CHECK(cli({"trivialize", "--in", data("zero_r8.json"), "--radius", "9"}).code ==
        cf::exit_code::malformed);
  CHECK(cli({"trivialize", "--algebra", "virasoro", "--in", data("zero_r8.json")}).code ==
        cf::exit_code::malformed);
  CHECK(cli({"jacobi", "--algebra", "witt", "--format", "yaml"}).code ==
        cf::exit_code::malformed);
}

TEST_CASE("corrupted cocycles exit 1") {
  TempDir dir;
  auto vir = AlgebraSpec::virasoro();
  auto psi = cf::central_cocycle(vir, 8);
  psi.set(e(2), e(3), E(5));
  auto path = dir.file("corrupt.json", cf::to_json(psi, vir).dump());
  CHECK(cli({"check-cocycle", "--in", path}).code == cf::exit_code::failed);
  auto r = cli({"trivialize", "--in", path});
  CHECK(r.code == cf::exit_code::failed);
  CHECK(r.err.find("not-a-cocycle") != std::string::npos);
}

TEST_CASE("is-coboundary honours --expect") {
  auto omega = data("omega_witt_trivial_r8.json");
  auto feasible = cli({"is-coboundary", "--coeffs", "trivial", "--in", omega});
  CHECK(feasible.code == cf::exit_code::failed);
  CHECK(feasible.out.find("0 = -1/2") != std::string::npos);
  CHECK(cli({"is-coboundary", "--coeffs", "trivial", "--in", omega, "--expect", "infeasible"})
            .code == cf::exit_code::verified);
  auto j = cli({"is-coboundary", "--coeffs", "trivial", "--in", omega, "--format", "json"});
  Json report = Json::parse(j.out);
  CHECK(report["feasible"] == false);
  CHECK(report["witness"]["contradiction"] == "-1/2");
  CHECK(cli({"is-coboundary", "--in", data("zero_r8.json"), "--expect", "infeasible"}).code ==
        cf::exit_code::failed);
}

TEST_CASE("output files receive the report") {
  TempDir dir;
  auto out = dir.file("report.json");
  auto r = cli({"h2", "--algebra", "witt", "--coeffs", "trivial", "--radius", "6", "--format",
                "json", "--out", out});
  CHECK(r.code == 0);
  CHECK(Json::parse(slurp(out))["h2_dim"] == 1);
}
