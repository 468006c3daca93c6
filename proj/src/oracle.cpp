#include "evoternary/oracle.hpp"

namespace evoternary {

namespace {

Vec triple_residual(const EvolutionAlgebra& A, const TernaryTriple& t, std::size_t i,
                    std::size_t j) {
    const Vec ei = A.unit(i), ej = A.unit(j);
    const Vec lhs = t.d1.apply(multiply(A, ei, ej));
    const Vec a = multiply(A, t.d2.apply(ei), ej);
    const Vec b = multiply(A, ei, t.d3.apply(ej));
    Vec out(A.dim(), A.field().zero());
    for (std::size_t k = 0; k < A.dim(); ++k) out[k] = lhs[k] - a[k] - b[k];
    return out;
}

}  // namespace

Vec flatten_triple(const TernaryTriple& t) {
    const std::size_t n = t.d1.rows();
    Vec v;
    v.reserve(3 * n * n);
    for (const Matrix* m : {&t.d1, &t.d2, &t.d3})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) v.push_back(m->at(k, i));
    return v;
}

TernaryTriple unflatten_triple(const FieldSpec& field, std::size_t n, const Vec& v) {
    if (v.size() != 3 * n * n) throw InvariantError("flattened triple length mismatch");
    TernaryTriple t{Matrix(field, n, n), Matrix(field, n, n), Matrix(field, n, n)};
    std::size_t pos = 0;
    for (Matrix* m : {&t.d1, &t.d2, &t.d3})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) m->set(k, i, v[pos++]);
    return t;
}

Matrix oracle_system(const EvolutionAlgebra& A) {
    const std::size_t n = A.dim();
    const FieldSpec& F = A.field();
    Matrix S(F, n * n * n, 3 * n * n);

    // The residual is linear in the triple, so column u is the residual of
    // the u-th one-hot triple, evaluated through the actual product.
    Vec hot(3 * n * n, F.zero());
    for (std::size_t u = 0; u < 3 * n * n; ++u) {
        hot[u] = F.one();
        const TernaryTriple t = unflatten_triple(F, n, hot);
        hot[u] = F.zero();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Vec res = triple_residual(A, t, i, j);
                for (std::size_t k = 0; k < n; ++k) {
                    if (res[k].is_zero()) continue;
                    S.set(((i * n) + j) * n + k, u, res[k]);
                }
            }
        }
    }
    return S;
}

OracleTder oracle_tder(const EvolutionAlgebra& A, std::size_t max_dim) {
    if (A.dim() > max_dim)
        throw BoundExceededError("oracle limited to dimension " + std::to_string(max_dim) +
                                 ", got " + std::to_string(A.dim()));
    const Matrix S = oracle_system(A);
    std::vector<TernaryTriple> basis;
    for (const Vec& v : right_null_basis(S))
        basis.push_back(unflatten_triple(A.field(), A.dim(), v));
    return OracleTder{basis.size(), std::move(basis)};
}

ConformanceReport compare_tder(const EvolutionAlgebra& A, std::size_t max_dim) {
    const OracleTder oracle = oracle_tder(A, max_dim);
    const TderSolution structured = tder_basis(A);
    const std::size_t n = A.dim();

    ConformanceReport rep;
    rep.structured_dimension = structured.dimension;
    rep.oracle_dimension = oracle.dimension;
    rep.dimensions_equal = structured.dimension == oracle.dimension;
    auto fail = [&rep](const std::string& why) {
        if (rep.first_failure.empty()) rep.first_failure = why;
    };
    if (!rep.dimensions_equal)
        fail("dimension mismatch: structured " + std::to_string(structured.dimension) +
             " vs oracle " + std::to_string(oracle.dimension));

    const Matrix S = oracle_system(A);
    rep.structured_in_oracle = true;
    for (std::size_t b = 0; b < structured.basis.size() && rep.structured_in_oracle; ++b) {
        const Vec res = S.apply(flatten_triple(structured.basis[b]));
        for (std::size_t e = 0; e < res.size(); ++e) {
            if (res[e].is_zero()) continue;
            rep.structured_in_oracle = false;
            const std::size_t i = e / (n * n), j = (e / n) % n, k = e % n;
            fail("structured basis triple " + std::to_string(b + 1) +
                 ": nonzero residual at equation (i=" + std::to_string(i + 1) +
                 ", j=" + std::to_string(j + 1) + ", k=" + std::to_string(k + 1) + ")");
            break;
        }
    }

    rep.oracle_satisfies_constraints = true;
    const Matrix& M = A.structure();
    for (std::size_t b = 0; b < oracle.basis.size() && rep.oracle_satisfies_constraints; ++b) {
        const TernaryTriple& t = oracle.basis[b];
        auto value = [&t](const EntryRef& e) -> const FieldElement& {
            return (e.map == MapIndex::D2 ? t.d2 : t.d3).at(e.row, e.col);
        };
        auto violate = [&](const std::string& what) {
            rep.oracle_satisfies_constraints = false;
            fail("oracle basis triple " + std::to_string(b + 1) + ": " + what);
        };

        for (const OffDiagConstraint& con : structured.report.offdiag) {
            for (const EntryConstraint& c : con.consequences) {
                if (c.status == EntryStatus::Zero && !value(c.entry).is_zero()) {
                    violate(c.entry.str() + " expected zero");
                } else if (c.status == EntryStatus::Linked &&
                           value(c.entry) != c.coeff * value(c.target)) {
                    violate(c.entry.str() + " violates its link to " + c.target.str());
                }
                if (!rep.oracle_satisfies_constraints) break;
            }
            if (!rep.oracle_satisfies_constraints) break;
        }
        if (!rep.oracle_satisfies_constraints) break;

        Vec lambda(n, A.field().zero());
        for (std::size_t k = 0; k < n; ++k) lambda[k] = t.d2.at(k, k) + t.d3.at(k, k);
        for (const auto& cls : structured.report.diag_classes.classes) {
            for (std::size_t m : cls) {
                if (lambda[m] != lambda[cls.front()]) {
                    violate("lambda[" + std::to_string(m + 1) + "] differs within its class");
                    break;
                }
            }
            if (!rep.oracle_satisfies_constraints) break;
        }
        if (!rep.oracle_satisfies_constraints) break;

        if (t.d1 * M != M * Matrix::diagonal(A.field(), lambda))
            violate("d1 M != M diag(lambda)");
    }

    return rep;
}

TautEnumeration enumerate_taut_pairs(const EvolutionAlgebra& A) {
    const FieldSpec& F = A.field();
    if (F.kind() != FieldKind::Prime)
        throw InvariantError("exhaustive enumeration requires a prime field");
    const std::size_t n = A.dim();
    if (n > 3) throw BoundExceededError("enumeration limited to dimension 3");
    const std::uint64_t p = F.modulus();
    double pairs_bound = 1.0;
    for (std::size_t e = 0; e < 2 * n * n; ++e) pairs_bound *= static_cast<double>(p);
    if (pairs_bound > 1e8)
        throw BoundExceededError("enumeration bound exceeded: p^(2n^2) > 10^8");
    if (!is_perfect(A))
        throw PerfectRequiredError("ternary automorphisms require a perfect algebra");

    // All invertible matrices, by counting in base p over the n^2 entries
    // (row-major digit order).
    std::vector<Matrix> invertible;
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < n * n; ++e) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix m(F, n, n);
        std::uint64_t rest = code;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                m.set(r, c, F.from_int(static_cast<std::int64_t>(rest % p)));
                rest /= p;
            }
        if (!determinant(m).is_zero()) invertible.push_back(std::move(m));
    }

    TautEnumeration out{0, {}};
    for (const Matrix& f2 : invertible) {
        for (const Matrix& f3 : invertible) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j) {
                    if (i == j) continue;
                    for (std::size_t k = 0; k < n && ok; ++k)
                        ok = (f2.at(k, i) * f3.at(k, j)).is_zero();
                }
            if (!ok) continue;
            // f1 = M H M^{-1} with H the entrywise product; invertible iff H is.
            Matrix H(F, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) H.set(r, c, f2.at(r, c) * f3.at(r, c));
            if (determinant(H).is_zero()) continue;
            out.pairs.emplace_back(f2, f3);
        }
    }
    out.count = out.pairs.size();
    return out;
}

}  // namespace evoternary
