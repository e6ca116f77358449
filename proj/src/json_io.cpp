#include "cochain_forge/json_io.hpp"

#include "cochain_forge/error.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace cochain_forge {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

void expect_object(const Json &j, const std::string &where,
                   std::initializer_list<const char *> allowed,
                   std::initializer_list<const char *> required) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto &[key, value] : j.items())
    if (!ok.contains(key)) fail(where, "unknown field '" + key + "'");
  for (const char *key : required)
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
}

const std::string &get_string(const Json &j, const std::string &where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get_ref<const std::string &>();
}

std::int64_t get_int(const Json &j, const std::string &where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

const Json &get_array(const Json &j, const std::string &where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

BasisIndex index_from_json(const Json &j, const std::string &where) {
  try {
    return BasisIndex::parse(get_string(j, where));
  } catch (const Error &err) {
    fail(where, err.detail());
  }
}

Json pair_entries(const TwoCochain &psi) {
  Json entries = Json::array();
  for (const auto &[p, v] : psi.entries())
    entries.push_back({{"i", p.first.str()}, {"j", p.second.str()}, {"value", to_json(v)}});
  return entries;
}

} // namespace

Json parse_json(const std::string &text, const std::string &source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &err) {
    std::size_t line = 1, column = 1;
    std::size_t end = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = err.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" +
                                      std::to_string(column) + ": " + what);
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json to_json(const Scalar &s) { return s.str(); }

Json to_json(const Element &x) {
  Json terms = Json::array();
  for (const auto &[idx, c] : x.terms()) terms.push_back({{"idx", idx.str()}, {"coeff", c.str()}});
  return {{"terms", std::move(terms)}};
}

Json to_json(const OneCochain &phi, const AlgebraSpec &alg) {
  Json entries = Json::array();
  for (const auto &[idx, v] : phi.values())
    entries.push_back({{"idx", idx.str()}, {"value", to_json(v)}});
  return {{"algebra", alg.name()}, {"radius", phi.window().radius}, {"entries", entries}};
}

Json to_json(const TwoCochain &psi, const AlgebraSpec &alg) {
  return {{"algebra", alg.name()}, {"radius", psi.window().radius}, {"entries", pair_entries(psi)}};
}

Json to_json(const ResidualReport &report) {
  Json residuals = Json::array();
  for (const auto &r : report.nonzero)
    residuals.push_back({{"triple", {r.triple.x.str(), r.triple.y.str(), r.triple.z.str()}},
                         {"value", to_json(r.value)},
                         {"note", r.note}});
  Json out;
  out["evaluable_triples"] = report.evaluable_triples;
  out["certified_radius"] = report.certified ? Json(report.certified->radius) : Json(nullptr);
  out["residuals"] = std::move(residuals);
  return out;
}

Json to_json(const TrivializationResult &result, const AlgebraSpec &alg) {
  Json stages = Json::array();
  for (const auto &s : result.stages)
    stages.push_back({{"stage", s.stage},
                      {"degree", s.degree},
                      {"certified_radius", s.certified.radius},
                      {"passed", s.passed}});
  Json out;
  out["phi"] = to_json(result.phi, alg);
  out["certified_radius"] = result.certified.radius;
  out["residual_entries"] = pair_entries(result.residual);
  out["stages"] = std::move(stages);
  return out;
}

Json to_json(const H2Report &report, const AlgebraSpec &alg) {
  Json reps = Json::array();
  for (const auto &r : report.representatives) reps.push_back(to_json(r, alg));
  Json out;
  out["cocycle_dim"] = report.cocycle_dim;
  out["coboundary_dim"] = report.coboundary_dim;
  out["h2_dim"] = report.h2_dim;
  out["representatives"] = std::move(reps);
  out["degree"] = report.degree;
  out["inner_radius"] = report.inner_radius;
  out["margin"] = report.margin;
  return out;
}

Json to_json(const CoboundarySolution &solution, const AlgebraSpec &alg) {
  Json out;
  out["feasible"] = solution.feasible();
  out["equations"] = solution.equations;
  out["unknowns"] = solution.unknowns;
  out["phi"] = solution.phi ? to_json(*solution.phi, alg) : Json(nullptr);
  if (solution.feasible()) {
    out["witness"] = nullptr;
  } else {
    Json terms = Json::array();
    for (const auto &t : solution.witness)
      terms.push_back({{"i", t.coordinate.x.str()},
                       {"j", t.coordinate.y.str()},
                       {"component", t.coordinate.value.str()},
                       {"weight", t.weight.str()}});
    out["witness"] = {{"terms", std::move(terms)},
                      {"contradiction", solution.contradiction.str()}};
  }
  return out;
}

Scalar scalar_from_json(const Json &j, const std::string &where) {
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  try {
    return Scalar::parse(get_string(j, where));
  } catch (const Error &err) {
    fail(where, err.detail());
  }
}

Element element_from_json(const Json &j, const std::string &where) {
  expect_object(j, where, {"terms"}, {"terms"});
  Element out;
  std::set<BasisIndex> seen;
  std::size_t k = 0;
  for (const auto &term : get_array(j["terms"], where + ".terms")) {
    std::string at = where + ".terms[" + std::to_string(k++) + "]";
    expect_object(term, at, {"idx", "coeff"}, {"idx", "coeff"});
    BasisIndex idx = index_from_json(term["idx"], at + ".idx");
    if (!seen.insert(idx).second) fail(at, "duplicate index " + idx.str());
    out.add_term(idx, scalar_from_json(term["coeff"], at + ".coeff"));
  }
  return out;
}

Loaded<TwoCochain> two_cochain_from_json(const Json &j) {
  expect_object(j, "cochain", {"algebra", "radius", "entries"}, {"algebra", "radius", "entries"});
  std::int64_t radius = get_int(j["radius"], "cochain.radius");
  if (radius < 0) fail("cochain.radius", "must be nonnegative");
  Loaded<TwoCochain> out{get_string(j["algebra"], "cochain.algebra"), TwoCochain(Window{radius})};
  std::set<BasisPair> seen;
  std::size_t k = 0;
  for (const auto &entry : get_array(j["entries"], "cochain.entries")) {
    std::string at = "cochain.entries[" + std::to_string(k++) + "]";
    expect_object(entry, at, {"i", "j", "value"}, {"i", "j", "value"});
    BasisIndex x = index_from_json(entry["i"], at + ".i");
    BasisIndex y = index_from_json(entry["j"], at + ".j");
    if (!seen.insert(x < y ? BasisPair{x, y} : BasisPair{y, x}).second)
      fail(at, "duplicate pair (" + x.str() + "," + y.str() + ")");
    out.cochain.set(x, y, element_from_json(entry["value"], at + ".value"));
  }
  return out;
}

Loaded<OneCochain> one_cochain_from_json(const Json &j) {
  expect_object(j, "cochain", {"algebra", "radius", "entries"}, {"algebra", "radius", "entries"});
  std::int64_t radius = get_int(j["radius"], "cochain.radius");
  if (radius < 0) fail("cochain.radius", "must be nonnegative");
  Loaded<OneCochain> out{get_string(j["algebra"], "cochain.algebra"), OneCochain(Window{radius})};
  std::set<BasisIndex> seen;
  std::size_t k = 0;
  for (const auto &entry : get_array(j["entries"], "cochain.entries")) {
    std::string at = "cochain.entries[" + std::to_string(k++) + "]";
    expect_object(entry, at, {"idx", "value"}, {"idx", "value"});
    BasisIndex x = index_from_json(entry["idx"], at + ".idx");
    if (!seen.insert(x).second) fail(at, "duplicate index " + x.str());
    out.cochain.set(x, element_from_json(entry["value"], at + ".value"));
  }
  return out;
}

AlgebraSpec algebra_from_json(const Json &j) {
  expect_object(j, "algebra", {"kind", "basis", "center", "grading_element", "brackets"},
                {"kind", "basis", "brackets"});
  if (get_string(j["kind"], "algebra.kind") != "custom")
    fail("algebra.kind", "only \"custom\" algebras are read from files");
  CustomStructure s;
  std::size_t k = 0;
  for (const auto &b : get_array(j["basis"], "algebra.basis")) {
    std::string at = "algebra.basis[" + std::to_string(k++) + "]";
    BasisIndex idx = index_from_json(b, at);
    if (idx.is_central()) fail(at, "declare t with \"center\": true");
    if (!s.indices.insert(idx.n()).second) fail(at, "duplicate basis index");
  }
  if (j.contains("center")) {
    if (!j["center"].is_boolean()) fail("algebra.center", "expected a boolean");
    s.center = j["center"].get<bool>();
  }
  if (j.contains("grading_element"))
    s.grading_element = element_from_json(j["grading_element"], "algebra.grading_element");
  k = 0;
  for (const auto &entry : get_array(j["brackets"], "algebra.brackets")) {
    std::string at = "algebra.brackets[" + std::to_string(k++) + "]";
    expect_object(entry, at, {"i", "j", "value"}, {"i", "j", "value"});
    s.brackets.emplace_back(index_from_json(entry["i"], at + ".i"),
                            index_from_json(entry["j"], at + ".j"),
                            element_from_json(entry["value"], at + ".value"));
  }
  return AlgebraSpec::custom(s);
}

AlgebraSpec resolve_algebra(const std::string &selector) {
  if (selector == "witt") return AlgebraSpec::witt();
  if (selector == "virasoro") return AlgebraSpec::virasoro();
  return algebra_from_json(read_json_file(selector));
}

} // namespace cochain_forge
