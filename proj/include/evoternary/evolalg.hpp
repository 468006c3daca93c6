#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "evoternary/matrix.hpp"

namespace evoternary {

/// Commutative algebra with a natural basis e_1..e_n in which e_i e_j = 0 for
/// i != j and e_i^2 = sum_k w_ki e_k. Column i of the structure matrix holds
/// the coordinates of e_i^2.
class EvolutionAlgebra {
public:
    explicit EvolutionAlgebra(Matrix structure);

    const FieldSpec& field() const { return structure_.field(); }
    std::size_t dim() const { return structure_.rows(); }
    const Matrix& structure() const { return structure_; }

    /// Coordinate vector of basis element e_i (0-indexed).
    Vec unit(std::size_t i) const;

private:
    Matrix structure_;
};

/// How the squares e_i^2 depend on each other. perm lists pivot columns of
/// rref(M) first (in pivot order), then the remaining indices ascending; in
/// that ordering the first r squares are independent and
/// e_{perm(r+i)}^2 = sum_k dependency[k][i] * e_{perm(k)}^2.
struct SquareDecomposition {
    std::vector<std::size_t> perm;  // position -> original index, 0-indexed
    std::size_t rank;
    Matrix dependency;  // r x (n - r)
    std::vector<bool> zero_square;  // per original index: column of M is zero
    /// e_i^2 = c * e_j^2 with j the smallest pivot index admitting such c != 0;
    /// absent for pivot columns and zero squares.
    std::vector<std::optional<std::pair<std::size_t, FieldElement>>> proportional_to;
};

/// Bilinear product: multiply(A, x, y) = sum_i x_i y_i * (column i of M).
Vec multiply(const EvolutionAlgebra& A, const Vec& x, const Vec& y);

/// det(M) != 0, equivalently A^2 = A.
bool is_perfect(const EvolutionAlgebra& A);

SquareDecomposition square_analysis(const EvolutionAlgebra& A);

}  // namespace evoternary
