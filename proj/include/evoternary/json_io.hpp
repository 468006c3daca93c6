#pragma once

#include <string>

#include "json.hpp"

#include "evoternary/catalog.hpp"
#include "evoternary/oracle.hpp"
#include "evoternary/taut.hpp"

namespace evoternary::io {

/// ordered_json keeps insertion order, so serialized output is byte-stable.
using json = nlohmann::ordered_json;

/// Throws ParseError on missing files or malformed JSON.
json read_json_file(const std::string& path);

json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldSpec& field);

json algebra_to_json(const EvolutionAlgebra& A);
EvolutionAlgebra algebra_from_json(const json& j);

json square_to_json(const SquareDecomposition& sq);

json tder_triple_to_json(const TernaryTriple& t);
TernaryTriple tder_triple_from_json(const json& j, const FieldSpec& field, std::size_t n);

json solution_to_json(const TderSolution& s);
json oracle_to_json(const OracleTder& o);
json conformance_to_json(const ConformanceReport& r);

json taut_triple_to_json(const TautTriple& t);
TautTriple taut_triple_from_json(const json& j, const FieldSpec& field, std::size_t n);
json decomposition_to_json(const TautDecomposition& d);

}  // namespace evoternary::io
