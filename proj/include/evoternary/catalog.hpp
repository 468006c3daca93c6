#pragma once

#include <string>
#include <vector>

#include "evoternary/tder.hpp"

namespace evoternary {

/// The ten two-dimensional structure-matrix classes, in catalogue order.
const std::vector<std::string>& catalog_names();

bool catalog_uses_alpha(const std::string& name);
bool catalog_uses_beta(const std::string& name);

struct CatalogParams {
    FieldElement alpha;
    FieldElement beta;
};

/// Builds the named class over the given field. Enforces the class
/// constraints: used parameters nonzero, and alpha * beta != 1 for A5ab.
EvolutionAlgebra catalog_instantiate(const std::string& name, const CatalogParams& params,
                                     const FieldSpec& field);

struct CatalogExpectation {
    std::string name;
    std::size_t dimension;
    FieldElement alpha;
    FieldElement beta;
};

/// The expected shape of the ternary-derivation space for the named class.
CatalogExpectation expected_tder(const std::string& name, const CatalogParams& params,
                                 const FieldSpec& field);

/// Checks a computed solution against the expectation; returns violation
/// descriptions (empty = pass).
std::vector<std::string> check_expected(const CatalogExpectation& expected,
                                        const EvolutionAlgebra& A, const TderSolution& sol);

}  // namespace evoternary
