#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoternary/evolalg.hpp"

namespace evoternary {

/// Triple of linear maps in matrix form; column i of d_l holds the
/// coordinates of d_l(e_i).
struct TernaryTriple {
    Matrix d1, d2, d3;
};

enum class MapIndex { D2, D3 };

/// One off-diagonal matrix entry, 0-indexed: map[row][col].
struct EntryRef {
    MapIndex map;
    std::size_t row, col;

    friend bool operator==(const EntryRef& a, const EntryRef& b) {
        return a.map == b.map && a.row == b.row && a.col == b.col;
    }
    std::string str() const;  // "d2[r][c]", 1-indexed
};

enum class EntryStatus { Free, Zero, Linked };

struct EntryConstraint {
    EntryRef entry;
    EntryStatus status;
    EntryRef target;    // Linked only: entry = coeff * target
    FieldElement coeff;
};

enum class PairCase { Independent, BothZero, ZeroNonzero, Proportional };

/// Solution of the two scalar systems coupling the four off-diagonal entries
/// d2[i][j], d2[j][i], d3[i][j], d3[j][i] for an unordered pair i < j:
///   e_i^2 * d2[i][j] + e_j^2 * d3[j][i] = 0
///   e_j^2 * d2[j][i] + e_i^2 * d3[i][j] = 0
struct OffDiagConstraint {
    std::size_t i, j;  // i < j, 0-indexed
    PairCase pair_case;
    FieldElement scale;      // Proportional: e_j^2 = scale * e_i^2
    std::size_t zero_index;  // ZeroNonzero: the index with zero square
    std::vector<EntryConstraint> consequences;  // all four entries, fixed order
};

/// Partition of basis indices whose diagonal sums lambda_k = d2[k][k] + d3[k][k]
/// must agree within a class.
struct DiagClassPartition {
    std::vector<std::size_t> representative;  // smallest member of each index's class
    std::vector<std::vector<std::size_t>> classes;  // sorted members, ordered by smallest

    std::size_t merges() const { return representative.size() - classes.size(); }
    bool same_class(std::size_t a, std::size_t b) const {
        return representative[a] == representative[b];
    }
};

struct D1Solution {
    Matrix particular;                     // M diag(lambda) G
    std::vector<Matrix> homogeneous_basis;  // single-row left-null matrices
};

struct TderReport {
    std::vector<OffDiagConstraint> offdiag;
    DiagClassPartition diag_classes;
    std::size_t d1_homogeneous_dim;
    bool perfect;
};

struct TderSolution {
    std::size_t dimension;
    std::vector<TernaryTriple> basis;
    TderReport report;
};

/// Checks d1(e_i e_j) = d2(e_i) e_j + e_i d3(e_j) on all n^2 basis pairs;
/// bilinearity extends this to arbitrary arguments.
bool verify_tder(const EvolutionAlgebra& A, const TernaryTriple& t);

/// One constraint per unordered pair {i, j}, in lexicographic order.
std::vector<OffDiagConstraint> offdiag_constraints(const EvolutionAlgebra& A);

/// Merges the classes of perm(j) and perm(r+i) for every nonzero dependency
/// coefficient c_ji: those squares are tied, so their lambda values coincide.
DiagClassPartition diag_constraints(const EvolutionAlgebra& A, const SquareDecomposition& sq);

/// Solves d1 M = M diag(lambda): particular solution M diag(lambda) G plus the
/// span of all matrices with a single left-null row. Returns nullopt when the
/// feasibility test M diag(lambda) G M = M diag(lambda) fails (lambda violates
/// the class constraints).
std::optional<D1Solution> solve_d1(const EvolutionAlgebra& A, const Vec& diag_sum);

/// Basis and parametrization of all ternary derivations. Generator order is
/// fixed: free off-diagonal parameters in lexicographic pair order, then
/// diagonal generators per class (by smallest member; the d2 generator, then
/// one d3 generator per member), then homogeneous d1 matrices in (row,
/// null-vector) order.
TderSolution tder_basis(const EvolutionAlgebra& A);

/// Perfect fast path: d2 = diag(diag2), d3 = diag(diag3),
/// d1 = M diag(diag2 + diag3) M^{-1}.
TernaryTriple tder_perfect_triple(const EvolutionAlgebra& A, const Vec& diag2, const Vec& diag3);

/// Plain-text rendering of the constraint report (free/zero/linked entries,
/// merged lambda classes, homogeneous dimension).
std::string render_report(const TderReport& report);

}  // namespace evoternary
