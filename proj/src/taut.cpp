#include "evoternary/taut.hpp"

#include <numeric>

namespace evoternary {

namespace {

void require_permutation(const std::vector<std::size_t>& sigma, std::size_t n) {
    if (sigma.size() != n) throw InvariantError("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v]) throw InvariantError("not a permutation");
        seen[v] = true;
    }
}

void require_square_triple(const EvolutionAlgebra& A, const TautTriple& t) {
    const std::size_t n = A.dim();
    for (const Matrix* m : {&t.f1, &t.f2, &t.f3}) {
        if (m->rows() != n || m->cols() != n) throw InvariantError("triple dimension mismatch");
        if (m->field() != A.field()) throw FieldMismatchError();
    }
}

void require_same_shape(const TautTriple& s, const TautTriple& t) {
    if (s.f1.rows() != t.f1.rows() || s.f1.field() != t.f1.field())
        throw InvariantError("triple dimension mismatch");
}

}  // namespace

Matrix monomial_matrix(const FieldSpec& field, const MonomialMap& m) {
    const std::size_t n = m.sigma.size();
    require_permutation(m.sigma, n);
    if (m.scalars.size() != n) throw InvariantError("scalar vector length mismatch");
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.scalars[i].is_zero()) throw InvariantError("zero scalar in monomial map");
        out.set(m.sigma[i], i, m.scalars[i]);
    }
    return out;
}

std::optional<MonomialMap> extract_monomial(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    MonomialMap out{std::vector<std::size_t>(n, 0), Vec(n, m.field().zero())};
    std::vector<bool> row_used(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t hits = 0, row = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (m.at(r, c).is_zero()) continue;
            ++hits;
            row = r;
        }
        if (hits != 1 || row_used[row]) return std::nullopt;
        row_used[row] = true;
        out.sigma[c] = row;
        out.scalars[c] = m.at(row, c);
    }
    return out;
}

TautTriple make_taut(const EvolutionAlgebra& A, const std::vector<std::size_t>& sigma,
                     const Vec& lambda, const Vec& mu) {
    const std::size_t n = A.dim();
    require_permutation(sigma, n);
    if (lambda.size() != n || mu.size() != n) throw InvariantError("scalar vector length mismatch");
    for (const Vec* v : {&lambda, &mu})
        for (const FieldElement& x : *v)
            if (x.is_zero()) throw InvariantError("zero scalar in ternary automorphism");
    if (!is_perfect(A))
        throw PerfectRequiredError("ternary automorphisms require a perfect algebra");

    Vec prod(n, A.field().zero());
    for (std::size_t i = 0; i < n; ++i) prod[i] = lambda[i] * mu[i];

    const Matrix& M = A.structure();
    Matrix f2 = monomial_matrix(A.field(), MonomialMap{sigma, lambda});
    Matrix f3 = monomial_matrix(A.field(), MonomialMap{sigma, mu});
    Matrix f1 = M * monomial_matrix(A.field(), MonomialMap{sigma, prod}) * inverse(M);
    return TautTriple{std::move(f1), std::move(f2), std::move(f3)};
}

bool verify_taut(const EvolutionAlgebra& A, const TautTriple& t) {
    require_square_triple(A, t);
    for (const Matrix* m : {&t.f1, &t.f2, &t.f3})
        if (determinant(*m).is_zero()) return false;
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = A.unit(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = A.unit(j);
            const Vec lhs = t.f1.apply(multiply(A, ei, ej));
            const Vec rhs = multiply(A, t.f2.apply(ei), t.f3.apply(ej));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

TautDecomposition decompose_taut(const EvolutionAlgebra& A, const TautTriple& t) {
    require_square_triple(A, t);
    if (!is_perfect(A))
        throw PerfectRequiredError("ternary automorphisms require a perfect algebra");

    const auto m2 = extract_monomial(t.f2);
    if (!m2)
        throw TautDecomposeError(TautDecomposeFailure::F2NotMonomial, "f2 is not monomial");
    const auto m3 = extract_monomial(t.f3);
    if (!m3)
        throw TautDecomposeError(TautDecomposeFailure::F3NotMonomial, "f3 is not monomial");
    if (m2->sigma != m3->sigma)
        throw TautDecomposeError(TautDecomposeFailure::PermutationMismatch,
                                 "f2 and f3 carry different permutations");

    const TautTriple expected = make_taut(A, m2->sigma, m2->scalars, m3->scalars);
    if (expected.f1 != t.f1)
        throw TautDecomposeError(TautDecomposeFailure::F1Mismatch,
                                 "f1 does not match the map determined by f2 and f3");
    return TautDecomposition{m2->sigma, m2->scalars, m3->scalars};
}

TautTriple compose_taut(const TautTriple& s, const TautTriple& t) {
    require_same_shape(s, t);
    return TautTriple{s.f1 * t.f1, s.f2 * t.f2, s.f3 * t.f3};
}

TautTriple invert_taut(const TautTriple& t) {
    return TautTriple{inverse(t.f1), inverse(t.f2), inverse(t.f3)};
}

std::vector<std::size_t> sample_permutation(SeededRng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

TautTriple sample_taut(const EvolutionAlgebra& A, SeededRng& rng,
                       const std::optional<std::vector<std::size_t>>& sigma) {
    const std::size_t n = A.dim();
    if (!is_perfect(A))
        throw PerfectRequiredError("ternary automorphisms require a perfect algebra");
    const std::vector<std::size_t> perm = sigma ? *sigma : sample_permutation(rng, n);
    Vec lambda(n, A.field().zero()), mu(n, A.field().zero());
    for (std::size_t i = 0; i < n; ++i) lambda[i] = A.field().sample(rng, true);
    for (std::size_t i = 0; i < n; ++i) mu[i] = A.field().sample(rng, true);
    return make_taut(A, perm, lambda, mu);
}

}  // namespace evoternary
