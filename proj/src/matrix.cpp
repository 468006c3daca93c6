#include "evoternary/matrix.hpp"

namespace evoternary {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatchError();
}

}  // namespace

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

Matrix Matrix::diagonal(const FieldSpec& field, const Vec& entries) {
    Matrix m(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, FieldElement v) {
    if (v.field() != field_) throw FieldMismatchError();
    data_[r * cols_ + c] = std::move(v);
}

Vec Matrix::row(std::size_t r) const {
    Vec out(cols_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

Vec Matrix::col(std::size_t c) const {
    Vec out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantError("matrix shape mismatch in +");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantError("matrix shape mismatch in -");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_) throw InvariantError("matrix shape mismatch in *");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                out.data_[r * o.cols_ + c] += a * o.at(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    if (c.field() != field_) throw FieldMismatchError();
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw InvariantError("vector length mismatch in apply");
    Vec out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r] += at(r, c) * x[c];
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

// Gauss-Jordan core. Tracking T doubles the work; callers that only need R
// and the pivot set (null-space extraction on the big oracle systems) skip it.
RrefResult rref_impl(const Matrix& M, bool track) {
    const std::size_t rows = M.rows(), cols = M.cols();
    Matrix R = M;
    Matrix T = track ? Matrix::identity(M.field(), rows) : Matrix(M.field(), 0, 0);
    std::vector<std::size_t> pivots;

    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t p = lead;
        while (p < rows && R.at(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead) {
            for (std::size_t c = 0; c < cols; ++c) {
                FieldElement tmp = R.at(p, c);
                R.set(p, c, R.at(lead, c));
                R.set(lead, c, tmp);
            }
            if (track)
                for (std::size_t c = 0; c < rows; ++c) {
                    FieldElement tmp = T.at(p, c);
                    T.set(p, c, T.at(lead, c));
                    T.set(lead, c, tmp);
                }
        }
        const FieldElement inv = R.at(lead, col).inverse();
        for (std::size_t c = 0; c < cols; ++c) R.set(lead, c, R.at(lead, c) * inv);
        if (track)
            for (std::size_t c = 0; c < rows; ++c) T.set(lead, c, T.at(lead, c) * inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || R.at(r, col).is_zero()) continue;
            const FieldElement f = R.at(r, col);
            for (std::size_t c = 0; c < cols; ++c) R.set(r, c, R.at(r, c) - f * R.at(lead, c));
            if (track)
                for (std::size_t c = 0; c < rows; ++c) T.set(r, c, T.at(r, c) - f * T.at(lead, c));
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(R), std::move(T), pivots.size(), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Matrix& M) { return rref_impl(M, true); }

FieldElement determinant(const Matrix& M) {
    if (M.rows() != M.cols()) throw InvariantError("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    Matrix A = M;
    bool negate = false;
    FieldElement det = M.field().one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && A.at(p, col).is_zero()) ++p;
        if (p == n) return M.field().zero();
        if (p != col) {
            negate = !negate;
            for (std::size_t c = 0; c < n; ++c) {
                FieldElement tmp = A.at(p, c);
                A.set(p, c, A.at(col, c));
                A.set(col, c, tmp);
            }
        }
        const FieldElement pivot = A.at(col, col);
        det *= pivot;
        const FieldElement inv = pivot.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A.at(r, col).is_zero()) continue;
            const FieldElement f = A.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) A.set(r, c, A.at(r, c) - f * A.at(col, c));
        }
    }
    return negate ? -det : det;
}

Matrix inverse(const Matrix& M) {
    if (M.rows() != M.cols()) throw InvariantError("inverse of a non-square matrix");
    RrefResult rr = rref(M);
    if (rr.rank != M.rows()) throw InvariantError("matrix is singular");
    return rr.T;  // T M = I
}

Matrix generalized_inverse(const Matrix& M) {
    if (M.rows() != M.cols()) throw InvariantError("generalized inverse of a non-square matrix");
    const std::size_t n = M.rows();
    const RrefResult base = rref(M);

    // Permutation moving pivot columns first, the rest in index order.
    std::vector<std::size_t> perm = base.pivot_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : base.pivot_cols) is_pivot[c] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) perm.push_back(c);
    }
    Matrix P(M.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) P.set(perm[j], j, M.field().one());

    // With pivot columns leading, T (M P) = [[I, C], [0, 0]], so
    // (M P) T (M P) = M P and G = P T satisfies M G M = M; G is invertible.
    const RrefResult shifted = rref(M * P);
    return P * shifted.T;
}

std::vector<Vec> right_null_basis(const Matrix& M) {
    const RrefResult rr = rref_impl(M, false);
    const std::size_t cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, M.field().zero());
        v[f] = M.field().one();
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.R.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> left_null_basis(const Matrix& M) {
    const RrefResult rr = rref(M);
    std::vector<Vec> basis;
    for (std::size_t r = rr.rank; r < M.rows(); ++r) basis.push_back(rr.T.row(r));
    return basis;
}

}  // namespace evoternary
