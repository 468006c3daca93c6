#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evoternary/tder.hpp"

namespace evoternary {

/// Dimensions above this make the n^3 x 3n^2 system too slow for routine runs.
inline constexpr std::size_t kOracleDimBound = 6;

/// Coefficient matrix of the defining identity, assembled directly from the
/// algebra product: for every basis pair (i, j) the n coordinates of
/// d1(e_i e_j) - d2(e_i) e_j - e_i d3(e_j), as linear forms in the 3n^2
/// entries. Row order: pair (i, j) lexicographic, coordinate k within; column
/// order: vec(d1) || vec(d2) || vec(d3), each column-major.
Matrix oracle_system(const EvolutionAlgebra& A);

/// The frozen unknown ordering used by oracle_system.
Vec flatten_triple(const TernaryTriple& t);
TernaryTriple unflatten_triple(const FieldSpec& field, std::size_t n, const Vec& v);

struct OracleTder {
    std::size_t dimension;
    std::vector<TernaryTriple> basis;
};

/// Null space of oracle_system, reshaped into triples. Independent of the
/// structured solver: uses only the algebra product and row reduction.
OracleTder oracle_tder(const EvolutionAlgebra& A, std::size_t max_dim = kOracleDimBound);

struct ConformanceReport {
    std::size_t structured_dimension = 0;
    std::size_t oracle_dimension = 0;
    bool dimensions_equal = false;
    bool structured_in_oracle = false;      // structured basis has zero residual
    bool oracle_satisfies_constraints = false;  // oracle basis obeys the report
    std::string first_failure;              // empty when all checks pass

    bool pass() const {
        return dimensions_equal && structured_in_oracle && oracle_satisfies_constraints;
    }
};

/// Cross-checks tder_basis against oracle_tder. Mismatches are report
/// contents, not errors.
ConformanceReport compare_tder(const EvolutionAlgebra& A, std::size_t max_dim = kOracleDimBound);

struct TautEnumeration {
    std::size_t count;
    std::vector<std::pair<Matrix, Matrix>> pairs;  // (f2, f3)
};

/// Exhaustive scan over all invertible (f2, f3) pairs of the row-support
/// condition f2[k][i] * f3[k][j] = 0 for i != j, keeping pairs whose induced
/// f1 is invertible. Prime fields only, n <= 3, p^(2n^2) <= 10^8.
TautEnumeration enumerate_taut_pairs(const EvolutionAlgebra& A);

}  // namespace evoternary
