#pragma once

#include "cochain_forge/oracle.hpp"
#include "cochain_forge/trivialize.hpp"

#include <json.hpp>

#include <string>

namespace cochain_forge {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error{Parse} with line and column.
Json parse_json(const std::string &text, const std::string &source);
Json read_json_file(const std::string &path);

Json to_json(const Scalar &s);
Json to_json(const Element &x);
Json to_json(const OneCochain &phi, const AlgebraSpec &alg);
Json to_json(const TwoCochain &psi, const AlgebraSpec &alg);
Json to_json(const ResidualReport &report);
Json to_json(const TrivializationResult &result, const AlgebraSpec &alg);
Json to_json(const H2Report &report, const AlgebraSpec &alg);
Json to_json(const CoboundarySolution &solution, const AlgebraSpec &alg);

Scalar scalar_from_json(const Json &j, const std::string &where = "scalar");
Element element_from_json(const Json &j, const std::string &where = "element");

/// A cochain file together with the algebra name it declares.
template <class Cochain> struct Loaded {
  std::string algebra;
  Cochain cochain;
};

Loaded<TwoCochain> two_cochain_from_json(const Json &j);
Loaded<OneCochain> one_cochain_from_json(const Json &j);

/// {"kind":"custom","basis":["e:-1",...],"center":false,
///  "grading_element":{...},"brackets":[{"i":..,"j":..,"value":{...}}]}
AlgebraSpec algebra_from_json(const Json &j);

/// "witt", "virasoro", or a path to a custom algebra file.
AlgebraSpec resolve_algebra(const std::string &selector);

} // namespace cochain_forge
