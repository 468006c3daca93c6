#include "evoternary/json_io.hpp"

#include <fstream>

namespace evoternary::io {

namespace {

std::string case_name(PairCase c) {
    switch (c) {
        case PairCase::Independent: return "independent";
        case PairCase::BothZero: return "both_zero";
        case PairCase::ZeroNonzero: return "zero_nonzero";
        case PairCase::Proportional: return "proportional";
    }
    return "";
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const FieldElement& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
    return j;
}

json field_to_json(const FieldSpec& field) {
    if (field.kind() == FieldKind::Rational) return json("rational");
    return json{{"prime", field.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "rational") return FieldSpec::rational();
    if (j.is_object() && j.contains("prime") && j["prime"].is_number_unsigned())
        return FieldSpec::prime(j["prime"].get<std::uint64_t>());
    throw ParseError("field must be \"rational\" or {\"prime\": p}");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const FieldSpec& field) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string()) throw ParseError("matrix entries must be element strings");
            m.set(r, c, field.parse(j[r][c].get<std::string>()));
        }
    }
    return m;
}

json algebra_to_json(const EvolutionAlgebra& A) {
    return json{{"field", field_to_json(A.field())},
                {"dimension", A.dim()},
                {"structure_matrix", matrix_to_json(A.structure())}};
}

EvolutionAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("dimension") ||
        !j.contains("structure_matrix"))
        throw ParseError("algebra needs \"field\", \"dimension\", \"structure_matrix\"");
    if (!j["dimension"].is_number_unsigned()) throw ParseError("dimension must be a count");
    const FieldSpec field = field_from_json(j["field"]);
    const std::size_t n = j["dimension"].get<std::size_t>();
    Matrix m = matrix_from_json(j["structure_matrix"], field);
    if (m.rows() != n || m.cols() != n)
        throw InvariantError("structure_matrix shape does not match dimension");
    return EvolutionAlgebra(std::move(m));
}

json square_to_json(const SquareDecomposition& sq) {
    json perm = json::array();
    for (std::size_t v : sq.perm) perm.push_back(v + 1);
    json zero = json::array();
    for (bool b : sq.zero_square) zero.push_back(b);
    json prop = json::array();
    for (std::size_t i = 0; i < sq.proportional_to.size(); ++i) {
        if (!sq.proportional_to[i]) continue;
        prop.push_back(json{{"index", i + 1},
                            {"partner", sq.proportional_to[i]->first + 1},
                            {"scale", sq.proportional_to[i]->second.str()}});
    }
    return json{{"perm", std::move(perm)},
                {"rank", sq.rank},
                {"dependency", matrix_to_json(sq.dependency)},
                {"zero_square", std::move(zero)},
                {"proportional", std::move(prop)}};
}

json tder_triple_to_json(const TernaryTriple& t) {
    return json{{"d1", matrix_to_json(t.d1)},
                {"d2", matrix_to_json(t.d2)},
                {"d3", matrix_to_json(t.d3)}};
}

namespace {

Matrix named_square_matrix(const json& j, const char* key, const FieldSpec& field, std::size_t n) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("triple needs \"") + key + "\"");
    Matrix m = matrix_from_json(j[key], field);
    if (m.rows() != n || m.cols() != n)
        throw InvariantError(std::string(key) + " must be " + std::to_string(n) + "x" +
                             std::to_string(n));
    return m;
}

}  // namespace

TernaryTriple tder_triple_from_json(const json& j, const FieldSpec& field, std::size_t n) {
    return TernaryTriple{named_square_matrix(j, "d1", field, n),
                         named_square_matrix(j, "d2", field, n),
                         named_square_matrix(j, "d3", field, n)};
}

json solution_to_json(const TderSolution& s) {
    json basis = json::array();
    for (const TernaryTriple& t : s.basis) basis.push_back(tder_triple_to_json(t));

    json offdiag = json::array();
    for (const OffDiagConstraint& con : s.report.offdiag) {
        json entries = json::array();
        for (const EntryConstraint& c : con.consequences) {
            json e{{"entry", c.entry.str()}};
            switch (c.status) {
                case EntryStatus::Free: e["status"] = "free"; break;
                case EntryStatus::Zero: e["status"] = "zero"; break;
                case EntryStatus::Linked:
                    e["status"] = "linked";
                    e["target"] = c.target.str();
                    e["coeff"] = c.coeff.str();
                    break;
            }
            entries.push_back(std::move(e));
        }
        json jc{{"i", con.i + 1}, {"j", con.j + 1}, {"case", case_name(con.pair_case)}};
        if (con.pair_case == PairCase::Proportional) jc["scale"] = con.scale.str();
        if (con.pair_case == PairCase::ZeroNonzero) jc["zero_index"] = con.zero_index + 1;
        jc["entries"] = std::move(entries);
        offdiag.push_back(std::move(jc));
    }

    json classes = json::array();
    for (const auto& cls : s.report.diag_classes.classes) {
        json c = json::array();
        for (std::size_t k : cls) c.push_back(k + 1);
        classes.push_back(std::move(c));
    }

    return json{{"dimension", s.dimension},
                {"perfect", s.report.perfect},
                {"basis", std::move(basis)},
                {"report",
                 json{{"offdiag", std::move(offdiag)},
                      {"lambda_classes", std::move(classes)},
                      {"d1_homogeneous_dim", s.report.d1_homogeneous_dim}}}};
}

json oracle_to_json(const OracleTder& o) {
    json basis = json::array();
    for (const TernaryTriple& t : o.basis) basis.push_back(tder_triple_to_json(t));
    return json{{"dimension", o.dimension}, {"basis", std::move(basis)}};
}

json conformance_to_json(const ConformanceReport& r) {
    return json{{"structured_dimension", r.structured_dimension},
                {"oracle_dimension", r.oracle_dimension},
                {"dimensions_equal", r.dimensions_equal},
                {"structured_in_oracle", r.structured_in_oracle},
                {"oracle_satisfies_constraints", r.oracle_satisfies_constraints},
                {"pass", r.pass()},
                {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)}};
}

json taut_triple_to_json(const TautTriple& t) {
    return json{{"f1", matrix_to_json(t.f1)},
                {"f2", matrix_to_json(t.f2)},
                {"f3", matrix_to_json(t.f3)}};
}

TautTriple taut_triple_from_json(const json& j, const FieldSpec& field, std::size_t n) {
    return TautTriple{named_square_matrix(j, "f1", field, n),
                      named_square_matrix(j, "f2", field, n),
                      named_square_matrix(j, "f3", field, n)};
}

json decomposition_to_json(const TautDecomposition& d) {
    json sigma = json::array();
    for (std::size_t v : d.sigma) sigma.push_back(v + 1);
    return json{
        {"sigma", std::move(sigma)}, {"lambda", vec_to_json(d.lambda)}, {"mu", vec_to_json(d.mu)}};
}

}  // namespace evoternary::io
