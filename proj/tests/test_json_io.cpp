#include "cochain_forge/json_io.hpp"

#include "support.hpp"

#include <string>

using namespace testing;
using cf::AlgebraSpec;
using cf::e;
using cf::Json;
using cf::TwoCochain;
using cf::Window;

namespace {

Json parse(const std::string &text) { return cf::parse_json(text, "inline"); }

cf::ErrorKind kind_of_two(const std::string &text) {
  return expect_error([&] { cf::two_cochain_from_json(parse(text)); }).kind();
}

} // namespace

TEST_CASE("elements serialize canonically") {
  cf::Element x = E(3, q(2, 3)) + T(q(-1, 2)) + E(-1);
  CHECK(cf::to_json(x).dump() ==
        R"({"terms":[{"idx":"e:-1","coeff":"1"},{"idx":"e:3","coeff":"2/3"},{"idx":"t","coeff":"-1/2"}]})");
  CHECK(cf::to_json(cf::Element()).dump() == R"({"terms":[]})");
  CHECK(cf::element_from_json(cf::to_json(x)) == x);
}

TEST_CASE("scalars accept strings and integers") {
  CHECK(cf::scalar_from_json(parse(R"("6/4")")) == q(3, 2));
  CHECK(cf::scalar_from_json(parse("-7")) == q(-7));
  CHECK(expect_error([] { cf::scalar_from_json(parse("1.5")); }).kind() == cf::ErrorKind::Parse);
  // Inside a file a zero denominator is malformed input.
  auto err = expect_error([] { cf::scalar_from_json(parse(R"("1/0")")); });
  CHECK(err.kind() == cf::ErrorKind::Parse);
  CHECK(err.detail().find("zero denominator") != std::string::npos);
}

TEST_CASE("cochains round trip") {
  auto vir = AlgebraSpec::virasoro();
  auto phi = random_phi(vir, 6, 21);
  auto psi = cf::delta1(phi, vir);
  auto two = cf::two_cochain_from_json(parse(cf::to_json(psi, vir).dump()));
  CHECK(two.algebra == "virasoro");
  CHECK(two.cochain == psi);
  auto one = cf::one_cochain_from_json(parse(cf::to_json(phi, vir).dump(2)));
  CHECK(one.cochain == phi);
  CHECK(one.cochain.window() == Window{6});
}

TEST_CASE("both orientations of a pair load with antisymmetry") {
  auto loaded = cf::two_cochain_from_json(parse(R"({"algebra":"witt","radius":3,"entries":[
    {"i":"e:2","j":"e:-1","value":{"terms":[{"idx":"e:1","coeff":"4"}]}}]})"));
  CHECK(loaded.cochain(e(-1), e(2)) == E(1, q(-4)));
}

TEST_CASE("malformed cochain files are rejected") {
  CHECK(kind_of_two(R"({"algebra":"witt","radius":3,"entries":[],"extra":1})") ==
        cf::ErrorKind::Parse);
  CHECK(kind_of_two(R"({"algebra":"witt","entries":[]})") == cf::ErrorKind::Parse);
  CHECK(kind_of_two(R"({"algebra":"witt","radius":"3","entries":[]})") == cf::ErrorKind::Parse);
  CHECK(kind_of_two(R"({"algebra":"witt","radius":3,"entries":[
    {"i":"e:1","j":"e:2","value":{"terms":[]},"note":"x"}]})") == cf::ErrorKind::Parse);
  CHECK(kind_of_two(R"({"algebra":"witt","radius":3,"entries":[
    {"i":"e:1","j":"f:2","value":{"terms":[]}}]})") == cf::ErrorKind::Parse);
  CHECK(kind_of_two(R"({"algebra":"witt","radius":3,"entries":[
    {"i":"e:1","j":"e:9","value":{"terms":[]}}]})") == cf::ErrorKind::OutOfWindow);
  CHECK(kind_of_two(R"({"algebra":"witt","radius":3,"entries":[
    {"i":"e:1","j":"e:1","value":{"terms":[{"idx":"e:2","coeff":"1"}]}}]})") ==
        cf::ErrorKind::Contract);
}

TEST_CASE("duplicate entries are rejected") {
  auto err = expect_error([] {
    cf::two_cochain_from_json(parse(R"({"algebra":"witt","radius":3,"entries":[
      {"i":"e:1","j":"e:2","value":{"terms":[]}},
      {"i":"e:2","j":"e:1","value":{"terms":[]}}]})"));
  });
  CHECK(err.kind() == cf::ErrorKind::Parse);
  CHECK(std::string(err.what()).find("duplicate") != std::string::npos);
  CHECK(expect_error([] {
          cf::element_from_json(parse(
              R"({"terms":[{"idx":"e:1","coeff":"1"},{"idx":"e:1","coeff":"2"}]})"));
        }).kind() == cf::ErrorKind::Parse);
}

TEST_CASE("syntax errors report their position") {
  auto err = expect_error([] { cf::parse_json("{\n  \"a\": [1,\n  }", "broken.json"); });
  CHECK(err.kind() == cf::ErrorKind::Parse);
  CHECK(std::string(err.what()).find("broken.json:3:") != std::string::npos);
}

TEST_CASE("custom algebra files") {
  auto sl2 = cf::resolve_algebra(std::string(CF_DATA_DIR) + "/sl2.json");
  CHECK(sl2.kind() == cf::AlgebraKind::Custom);
  CHECK(sl2.bracket(e(1), e(-1)) == E(0, q(-2)));
  CHECK(sl2.grading_element() == E(0));
  CHECK(cf::resolve_algebra("witt").kind() == cf::AlgebraKind::Witt);
  CHECK(cf::resolve_algebra("virasoro").has_center());

  auto not_graded = parse(R"({"kind":"custom","basis":["e:-1","e:0","e:1"],
    "grading_element":{"terms":[{"idx":"e:0","coeff":"2"}]},
    "brackets":[{"i":"e:-1","j":"e:0","value":{"terms":[{"idx":"e:-1","coeff":"1"}]}}]})");
  CHECK(expect_error([&] { cf::algebra_from_json(not_graded); }).kind() ==
        cf::ErrorKind::Contract);
  auto leaves = parse(R"({"kind":"custom","basis":["e:0","e:1"],
    "brackets":[{"i":"e:0","j":"e:1","value":{"terms":[{"idx":"e:2","coeff":"1"}]}}]})");
  CHECK(expect_error([&] { cf::algebra_from_json(leaves); }).kind() ==
        cf::ErrorKind::OutOfWindow);
  CHECK_THROWS_AS(cf::resolve_algebra("/nonexistent/algebra.json"), cf::Error);
}

TEST_CASE("report serialization") {
  auto witt = AlgebraSpec::witt();
  auto report = cf::h2_report(witt, cf::Module::Trivial, 0, 6, 4);
  Json j = cf::to_json(report, witt);
  CHECK(j["h2_dim"] == 1);
  CHECK(j["cocycle_dim"] == 2);
  CHECK(j["representatives"].size() == 1);
  auto rep = cf::two_cochain_from_json(j["representatives"][0]);
  CHECK(rep.cochain == report.representatives.front());
}
