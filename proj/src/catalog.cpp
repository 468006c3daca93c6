#include "evoternary/catalog.hpp"

#include <algorithm>
#include <array>

namespace evoternary {

namespace {

const std::vector<std::string> kNames = {"A0", "A1",   "A2a", "A3a", "A4a",
                                         "A5ab", "A5", "A6",  "A7",  "A8a"};

bool is_perfect_class(const std::string& name) {
    return name == "A1" || name == "A2a" || name == "A3a" || name == "A4a" || name == "A5ab";
}

std::size_t class_dimension(const std::string& name) {
    if (name == "A0") return 12;
    if (name == "A5" || name == "A8a") return 7;
    if (name == "A6" || name == "A7") return 8;
    return 4;  // perfect classes
}

void validate_params(const std::string& name, const CatalogParams& p, const FieldSpec& field) {
    if (catalog_uses_alpha(name)) {
        if (p.alpha.field() != field) throw FieldMismatchError();
        if (p.alpha.is_zero()) throw InvariantError(name + " requires alpha != 0");
    }
    if (catalog_uses_beta(name)) {
        if (p.beta.field() != field) throw FieldMismatchError();
        if (p.beta.is_zero()) throw InvariantError(name + " requires beta != 0");
        if ((p.alpha * p.beta).is_one()) throw InvariantError(name + " requires alpha*beta != 1");
    }
}

Matrix class_matrix(const std::string& name, const CatalogParams& p, const FieldSpec& F) {
    const FieldElement O = F.zero(), I = F.one();
    std::array<FieldElement, 4> e = {O, O, O, O};  // row-major [[e0, e1], [e2, e3]]
    if (name == "A0") {
        // all zero
    } else if (name == "A1") {
        e = {I, O, O, I};
    } else if (name == "A2a") {
        e = {O, p.alpha, I, O};
    } else if (name == "A3a") {
        e = {I, p.alpha, O, I};
    } else if (name == "A4a") {
        e = {O, I, p.alpha, I};
    } else if (name == "A5ab") {
        e = {I, p.alpha, p.beta, I};
    } else if (name == "A5") {
        e = {I, -I, -I, I};
    } else if (name == "A6") {
        e = {O, I, O, O};
    } else if (name == "A7") {
        e = {I, O, O, O};
    } else if (name == "A8a") {
        e = {I, p.alpha, O, O};
    } else {
        throw InvariantError("unknown catalogue entry '" + name + "'");
    }
    Matrix m(F, 2, 2);
    m.set(0, 0, e[0]);
    m.set(0, 1, e[1]);
    m.set(1, 0, e[2]);
    m.set(1, 1, e[3]);
    return m;
}

Matrix perfect_d1(const CatalogExpectation& e, const FieldSpec& F, const FieldElement& l,
                  const FieldElement& m) {
    Matrix d1(F, 2, 2);
    if (e.name == "A1") {
        d1.set(0, 0, l);
        d1.set(1, 1, m);
    } else if (e.name == "A2a") {
        d1.set(0, 0, m);
        d1.set(1, 1, l);
    } else if (e.name == "A3a") {
        d1.set(0, 0, l);
        d1.set(0, 1, e.alpha * (m - l));
        d1.set(1, 1, m);
    } else if (e.name == "A4a") {
        d1.set(0, 0, m);
        d1.set(1, 0, m - l);
        d1.set(1, 1, l);
    } else {  // A5ab; entry (2,1) is beta*(mu - lambda), mirroring (1,2)
        const FieldElement g = e.alpha * e.beta;
        const FieldElement inv = (g - F.one()).inverse();
        d1.set(0, 0, inv * (g * m - l));
        d1.set(0, 1, inv * e.alpha * (l - m));
        d1.set(1, 0, inv * e.beta * (m - l));
        d1.set(1, 1, inv * (g * l - m));
    }
    return d1;
}

}  // namespace

const std::vector<std::string>& catalog_names() { return kNames; }

bool catalog_uses_alpha(const std::string& name) {
    return name == "A2a" || name == "A3a" || name == "A4a" || name == "A5ab" || name == "A8a";
}

bool catalog_uses_beta(const std::string& name) { return name == "A5ab"; }

EvolutionAlgebra catalog_instantiate(const std::string& name, const CatalogParams& params,
                                     const FieldSpec& field) {
    validate_params(name, params, field);
    return EvolutionAlgebra(class_matrix(name, params, field));
}

CatalogExpectation expected_tder(const std::string& name, const CatalogParams& params,
                                 const FieldSpec& field) {
    validate_params(name, params, field);
    if (std::find(kNames.begin(), kNames.end(), name) == kNames.end())
        throw InvariantError("unknown catalogue entry '" + name + "'");
    return CatalogExpectation{name, class_dimension(name), params.alpha, params.beta};
}

std::vector<std::string> check_expected(const CatalogExpectation& e, const EvolutionAlgebra& A,
                                        const TderSolution& s) {
    std::vector<std::string> bad;
    auto flag = [&](const std::string& w) { bad.push_back(e.name + ": " + w); };

    if (s.dimension != e.dimension)
        flag("dimension " + std::to_string(s.dimension) + " != expected " +
             std::to_string(e.dimension));
    if (s.basis.size() != s.dimension) flag("basis size differs from dimension");

    for (std::size_t b = 0; b < s.basis.size(); ++b) {
        const TernaryTriple& t = s.basis[b];
        auto tb = [&](const std::string& w) {
            flag("basis triple " + std::to_string(b + 1) + ": " + w);
        };
        const FieldElement l = t.d2.at(0, 0) + t.d3.at(0, 0);
        const FieldElement m = t.d2.at(1, 1) + t.d3.at(1, 1);

        if (is_perfect_class(e.name)) {
            if (!t.d2.at(0, 1).is_zero() || !t.d2.at(1, 0).is_zero() ||
                !t.d3.at(0, 1).is_zero() || !t.d3.at(1, 0).is_zero())
                tb("d2/d3 not diagonal");
            if (t.d1 != perfect_d1(e, A.field(), l, m)) tb("d1 differs from the closed form");
        } else if (e.name == "A5") {
            if (t.d3.at(0, 1) != t.d2.at(1, 0)) tb("d3[1][2] != d2[2][1]");
            if (t.d3.at(1, 0) != t.d2.at(0, 1)) tb("d3[2][1] != d2[1][2]");
            if (l != m) tb("lambda != mu");
            if (t.d1.at(0, 0) != l + t.d1.at(0, 1)) tb("d1[1][1] != lambda + d1[1][2]");
            if (t.d1.at(1, 1) != l + t.d1.at(1, 0)) tb("d1[2][2] != lambda + d1[2][1]");
        } else if (e.name == "A6") {
            if (!t.d2.at(1, 0).is_zero() || !t.d3.at(1, 0).is_zero() || !t.d1.at(1, 0).is_zero())
                tb("d1/d2/d3 not upper triangular");
            if (t.d1.at(0, 0) != m) tb("d1[1][1] != mu");
        } else if (e.name == "A7") {
            if (!t.d2.at(0, 1).is_zero() || !t.d3.at(0, 1).is_zero())
                tb("d2/d3 not lower triangular");
            if (!t.d1.at(1, 0).is_zero()) tb("d1 not upper triangular");
            if (t.d1.at(0, 0) != l) tb("d1[1][1] != lambda");
        } else if (e.name == "A8a") {
            if (t.d3.at(0, 1) != -e.alpha * t.d2.at(1, 0)) tb("d3[1][2] != -alpha*d2[2][1]");
            if (t.d3.at(1, 0) != -e.alpha.inverse() * t.d2.at(0, 1))
                tb("d3[2][1] != -(1/alpha)*d2[1][2]");
            if (l != m) tb("lambda != mu");
            if (!t.d1.at(1, 0).is_zero()) tb("d1[2][1] != 0");
            if (t.d1.at(0, 0) != l) tb("d1[1][1] != lambda");
        }
        // A0: every triple is valid
        if (bad.size() > 8) return bad;  // enough evidence
    }

    // Report shape: pair case, merged classes, homogeneous dimension.
    if (s.report.offdiag.size() != 1) {
        flag("expected exactly one off-diagonal pair");
        return bad;
    }
    const OffDiagConstraint& con = s.report.offdiag[0];
    const std::size_t classes = s.report.diag_classes.classes.size();
    const std::size_t hom = s.report.d1_homogeneous_dim;

    if (is_perfect_class(e.name)) {
        if (con.pair_case != PairCase::Independent) flag("expected independent squares");
        if (classes != 2 || hom != 0) flag("expected singleton classes and trivial d1 kernel");
    } else if (e.name == "A0") {
        if (con.pair_case != PairCase::BothZero) flag("expected both squares zero");
        if (classes != 2 || hom != 4) flag("expected singleton classes and full d1 freedom");
    } else if (e.name == "A5" || e.name == "A8a") {
        const FieldElement want_scale = e.name == "A5" ? -A.field().one() : e.alpha;
        if (con.pair_case != PairCase::Proportional || con.scale != want_scale)
            flag("expected proportional squares");
        if (classes != 1) flag("expected merged lambda class");
        if (hom != 2) flag("expected d1 kernel of dimension 2");
    } else {  // A6, A7
        const std::size_t want_zero = e.name == "A6" ? 0 : 1;
        if (con.pair_case != PairCase::ZeroNonzero || con.zero_index != want_zero)
            flag("expected one zero square");
        if (classes != 2 || hom != 2) flag("expected singleton classes and d1 kernel 2");
    }

    return bad;
}

}  // namespace evoternary
