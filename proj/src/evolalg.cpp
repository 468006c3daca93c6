#include "evoternary/evolalg.hpp"

namespace evoternary {

EvolutionAlgebra::EvolutionAlgebra(Matrix structure) : structure_(std::move(structure)) {
    if (structure_.rows() != structure_.cols())
        throw InvariantError("structure matrix must be square");
    if (structure_.rows() == 0) throw InvariantError("dimension must be at least 1");
}

Vec EvolutionAlgebra::unit(std::size_t i) const {
    Vec v(dim(), field().zero());
    v[i] = field().one();
    return v;
}

Vec multiply(const EvolutionAlgebra& A, const Vec& x, const Vec& y) {
    const std::size_t n = A.dim();
    if (x.size() != n || y.size() != n) throw InvariantError("vector length mismatch in multiply");
    Vec out(n, A.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElement c = x[i] * y[i];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += c * A.structure().at(k, i);
    }
    return out;
}

bool is_perfect(const EvolutionAlgebra& A) { return !determinant(A.structure()).is_zero(); }

SquareDecomposition square_analysis(const EvolutionAlgebra& A) {
    const Matrix& M = A.structure();
    const std::size_t n = A.dim();
    const RrefResult rr = rref(M);
    const std::size_t r = rr.rank;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> perm = rr.pivot_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) perm.push_back(c);

    // Columns of the RREF express each non-pivot column of M in the pivot
    // columns, which is exactly the dependency data.
    Matrix C(A.field(), r, n - r);
    for (std::size_t i = r; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k) C.set(k, i - r, rr.R.at(k, perm[i]));

    std::vector<bool> zero_square(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        bool zero = true;
        for (std::size_t k = 0; k < n && zero; ++k) zero = M.at(k, c).is_zero();
        zero_square[c] = zero;
    }

    std::vector<std::optional<std::pair<std::size_t, FieldElement>>> proportional(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (zero_square[c] || is_pivot[c]) continue;
        for (std::size_t p : rr.pivot_cols) {
            // Candidate scale from the first nonzero row of the pivot column,
            // then full-column verification.
            std::size_t k0 = 0;
            while (M.at(k0, p).is_zero()) ++k0;
            if (M.at(k0, c).is_zero()) continue;
            const FieldElement scale = M.at(k0, c) / M.at(k0, p);
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) ok = M.at(k, c) == scale * M.at(k, p);
            if (ok) {
                proportional[c] = std::make_pair(p, scale);
                break;  // pivot columns scanned in ascending order
            }
        }
    }

    return SquareDecomposition{std::move(perm), r, std::move(C), std::move(zero_square),
                               std::move(proportional)};
}

}  // namespace evoternary
