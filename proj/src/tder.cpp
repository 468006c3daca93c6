#include "evoternary/tder.hpp"

#include <numeric>
#include <sstream>

namespace evoternary {

namespace {

std::string coeff_times(const FieldElement& c, const std::string& s) {
    if (c.is_one()) return s;
    if ((-c).is_one()) return "-" + s;
    return c.str() + "*" + s;
}

bool column_is_zero(const Matrix& M, std::size_t c) {
    for (std::size_t k = 0; k < M.rows(); ++k)
        if (!M.at(k, c).is_zero()) return false;
    return true;
}

void require_square_triple(const EvolutionAlgebra& A, const TernaryTriple& t) {
    const std::size_t n = A.dim();
    for (const Matrix* m : {&t.d1, &t.d2, &t.d3}) {
        if (m->rows() != n || m->cols() != n) throw InvariantError("triple dimension mismatch");
        if (m->field() != A.field()) throw FieldMismatchError();
    }
}

}  // namespace

std::string EntryRef::str() const {
    return std::string(map == MapIndex::D2 ? "d2" : "d3") + "[" + std::to_string(row + 1) + "][" +
           std::to_string(col + 1) + "]";
}

bool verify_tder(const EvolutionAlgebra& A, const TernaryTriple& t) {
    require_square_triple(A, t);
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = A.unit(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = A.unit(j);
            const Vec lhs = t.d1.apply(multiply(A, ei, ej));
            const Vec rhs_a = multiply(A, t.d2.apply(ei), ej);
            const Vec rhs_b = multiply(A, ei, t.d3.apply(ej));
            for (std::size_t k = 0; k < n; ++k)
                if (lhs[k] != rhs_a[k] + rhs_b[k]) return false;
        }
    }
    return true;
}

std::vector<OffDiagConstraint> offdiag_constraints(const EvolutionAlgebra& A) {
    const Matrix& M = A.structure();
    const std::size_t n = A.dim();
    const FieldSpec& F = A.field();

    std::vector<OffDiagConstraint> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool zi = column_is_zero(M, i);
            const bool zj = column_is_zero(M, j);

            OffDiagConstraint con{i, j, PairCase::Independent, F.zero(), 0, {}};
            const EntryRef d2ij{MapIndex::D2, i, j};
            const EntryRef d2ji{MapIndex::D2, j, i};
            const EntryRef d3ij{MapIndex::D3, i, j};
            const EntryRef d3ji{MapIndex::D3, j, i};
            auto free_entry = [&](EntryRef e) {
                con.consequences.push_back({e, EntryStatus::Free, e, F.zero()});
            };
            auto zero_entry = [&](EntryRef e) {
                con.consequences.push_back({e, EntryStatus::Zero, e, F.zero()});
            };
            auto linked_entry = [&](EntryRef e, EntryRef target, FieldElement c) {
                con.consequences.push_back({e, EntryStatus::Linked, target, std::move(c)});
            };

            if (zi && zj) {
                // Both equations vanish identically.
                con.pair_case = PairCase::BothZero;
                free_entry(d2ij);
                free_entry(d2ji);
                free_entry(d3ij);
                free_entry(d3ji);
            } else if (zi != zj) {
                // With e_z^2 = 0 only the terms against the nonzero square
                // survive, forcing d2[w][z] = d3[w][z] = 0.
                const std::size_t z = zi ? i : j;
                con.pair_case = PairCase::ZeroNonzero;
                con.zero_index = z;
                if (z == i) {
                    free_entry(d2ij);
                    zero_entry(d2ji);
                    free_entry(d3ij);
                    zero_entry(d3ji);
                } else {
                    zero_entry(d2ij);
                    free_entry(d2ji);
                    zero_entry(d3ij);
                    free_entry(d3ji);
                }
            } else {
                // Both nonzero: proportional iff e_j^2 = t * e_i^2.
                std::size_t k0 = 0;
                while (M.at(k0, i).is_zero()) ++k0;
                bool proportional = !M.at(k0, j).is_zero();
                FieldElement t = F.zero();
                if (proportional) {
                    t = M.at(k0, j) / M.at(k0, i);
                    for (std::size_t k = 0; k < n && proportional; ++k)
                        proportional = M.at(k, j) == t * M.at(k, i);
                }
                if (proportional) {
                    // e_i^2 d2[i][j] + e_j^2 d3[j][i] = 0 collapses to
                    // d2[i][j] + t d3[j][i] = 0, and symmetrically.
                    con.pair_case = PairCase::Proportional;
                    con.scale = t;
                    free_entry(d2ij);
                    free_entry(d2ji);
                    linked_entry(d3ij, d2ji, -t);
                    linked_entry(d3ji, d2ij, -t.inverse());
                } else {
                    con.pair_case = PairCase::Independent;
                    zero_entry(d2ij);
                    zero_entry(d2ji);
                    zero_entry(d3ij);
                    zero_entry(d3ji);
                }
            }
            out.push_back(std::move(con));
        }
    }
    return out;
}

DiagClassPartition diag_constraints(const EvolutionAlgebra& A, const SquareDecomposition& sq) {
    const std::size_t n = A.dim();
    const std::size_t r = sq.rank;

    std::vector<std::size_t> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto unite = [&](std::size_t a, std::size_t b) {
        const std::size_t la = rep[a], lb = rep[b];
        if (la == lb) return;
        const std::size_t lo = std::min(la, lb), hi = std::max(la, lb);
        for (std::size_t k = 0; k < n; ++k)
            if (rep[k] == hi) rep[k] = lo;
    };

    for (std::size_t i = 0; r + i < n; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (!sq.dependency.at(j, i).is_zero()) unite(sq.perm[j], sq.perm[r + i]);

    // Labels equal the smallest member of each class, so sorting by label
    // orders classes by smallest member.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t label = 0; label < n; ++label) {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < n; ++k)
            if (rep[k] == label) members.push_back(k);
        if (!members.empty()) classes.push_back(std::move(members));
    }
    return DiagClassPartition{std::move(rep), std::move(classes)};
}

std::optional<D1Solution> solve_d1(const EvolutionAlgebra& A, const Vec& diag_sum) {
    const std::size_t n = A.dim();
    if (diag_sum.size() != n) throw InvariantError("diagonal vector length mismatch");
    const Matrix& M = A.structure();
    const Matrix MD = M * Matrix::diagonal(A.field(), diag_sum);
    const Matrix G = generalized_inverse(M);
    Matrix particular = MD * G;
    if (particular * M != MD) return std::nullopt;

    std::vector<Matrix> hom;
    const std::vector<Vec> null_rows = left_null_basis(M);
    for (std::size_t row = 0; row < n; ++row) {
        for (const Vec& v : null_rows) {
            Matrix h(A.field(), n, n);
            for (std::size_t c = 0; c < n; ++c) h.set(row, c, v[c]);
            hom.push_back(std::move(h));
        }
    }
    return D1Solution{std::move(particular), std::move(hom)};
}

TderSolution tder_basis(const EvolutionAlgebra& A) {
    const std::size_t n = A.dim();
    const FieldSpec& F = A.field();
    const SquareDecomposition sq = square_analysis(A);
    std::vector<OffDiagConstraint> offdiag = offdiag_constraints(A);
    DiagClassPartition part = diag_constraints(A, sq);

    std::vector<TernaryTriple> basis;
    const Matrix zero(F, n, n);

    // (a) One generator per free off-diagonal entry; linked entries follow.
    std::size_t free_count = 0;
    for (const OffDiagConstraint& con : offdiag) {
        for (const EntryConstraint& c : con.consequences) {
            if (c.status != EntryStatus::Free) continue;
            ++free_count;
            Matrix d2(F, n, n), d3(F, n, n);
            auto put = [&](const EntryRef& e, const FieldElement& v) {
                (e.map == MapIndex::D2 ? d2 : d3).set(e.row, e.col, v);
            };
            put(c.entry, F.one());
            for (const EntryConstraint& l : con.consequences)
                if (l.status == EntryStatus::Linked && l.target == c.entry) put(l.entry, l.coeff);
            basis.push_back({zero, std::move(d2), std::move(d3)});
        }
    }

    // (b) Diagonal generators. Per class: set lambda = 1 across the class via
    // d2 (one generator), then per member a d3 generator whose lambda is kept
    // class-constant by compensating d2 entries on the other members.
    for (const std::vector<std::size_t>& cls : part.classes) {
        Vec lambda(n, F.zero());
        for (std::size_t k : cls) lambda[k] = F.one();
        const auto sol = solve_d1(A, lambda);
        if (!sol) throw InvariantError("class-constant lambda must be feasible");

        Matrix d2(F, n, n), d3(F, n, n);
        for (std::size_t k : cls) d2.set(k, k, F.one());
        basis.push_back({sol->particular, std::move(d2), std::move(d3)});

        for (std::size_t k : cls) {
            Matrix b2(F, n, n), b3(F, n, n);
            b3.set(k, k, F.one());
            for (std::size_t m : cls)
                if (m != k) b2.set(m, m, F.one());
            basis.push_back({sol->particular, std::move(b2), std::move(b3)});
        }
    }

    // (c) Homogeneous d1 part: lambda = 0, so any matrix with left-null rows.
    {
        const auto sol = solve_d1(A, Vec(n, F.zero()));
        for (const Matrix& h : sol->homogeneous_basis) basis.push_back({h, zero, zero});
    }

    const std::size_t hom_dim = n * (n - sq.rank);
    const std::size_t expected = 2 * n - part.merges() + free_count + hom_dim;
    if (basis.size() != expected) throw InvariantError("generator count mismatch");

    TderReport report{std::move(offdiag), std::move(part), hom_dim, is_perfect(A)};
    return TderSolution{basis.size(), std::move(basis), std::move(report)};
}

TernaryTriple tder_perfect_triple(const EvolutionAlgebra& A, const Vec& diag2, const Vec& diag3) {
    const std::size_t n = A.dim();
    if (diag2.size() != n || diag3.size() != n)
        throw InvariantError("diagonal vector length mismatch");
    if (!is_perfect(A))
        throw PerfectRequiredError("closed-form triple requires a perfect algebra");
    Vec sum(n, A.field().zero());
    for (std::size_t k = 0; k < n; ++k) sum[k] = diag2[k] + diag3[k];
    const Matrix& M = A.structure();
    Matrix d1 = M * Matrix::diagonal(A.field(), sum) * inverse(M);
    return TernaryTriple{std::move(d1), Matrix::diagonal(A.field(), diag2),
                         Matrix::diagonal(A.field(), diag3)};
}

std::string render_report(const TderReport& report) {
    std::ostringstream os;
    os << "offdiag:";
    if (report.offdiag.empty()) os << " none";
    os << "\n";
    for (const OffDiagConstraint& con : report.offdiag) {
        os << "  (" << con.i + 1 << "," << con.j + 1 << "): ";
        switch (con.pair_case) {
            case PairCase::Independent:
                os << "independent squares";
                break;
            case PairCase::BothZero:
                os << "e" << con.i + 1 << "^2 = e" << con.j + 1 << "^2 = 0";
                break;
            case PairCase::ZeroNonzero: {
                const std::size_t w = con.zero_index == con.i ? con.j : con.i;
                os << "e" << con.zero_index + 1 << "^2 = 0, e" << w + 1 << "^2 != 0";
                break;
            }
            case PairCase::Proportional:
                os << "e" << con.j + 1
                   << "^2 = " << coeff_times(con.scale, "e" + std::to_string(con.i + 1) + "^2");
                break;
        }
        for (const EntryConstraint& c : con.consequences) {
            os << "; " << c.entry.str();
            switch (c.status) {
                case EntryStatus::Free:
                    os << " free";
                    break;
                case EntryStatus::Zero:
                    os << " = 0";
                    break;
                case EntryStatus::Linked:
                    os << " = " << coeff_times(c.coeff, c.target.str());
                    break;
            }
        }
        os << "\n";
    }

    os << "lambda classes:";
    for (const auto& cls : report.diag_classes.classes) {
        os << " {";
        for (std::size_t k = 0; k < cls.size(); ++k) os << (k ? "," : "") << cls[k] + 1;
        os << "}";
    }
    os << "\n";

    os << "lambda constraints:";
    bool any = false;
    for (const auto& cls : report.diag_classes.classes) {
        if (cls.size() < 2) continue;
        any = true;
        os << " ";
        for (std::size_t k = 0; k < cls.size(); ++k)
            os << (k ? " = " : "") << "lambda[" << cls[k] + 1 << "]";
        os << ";";
    }
    if (!any) os << " none";
    os << "\n";

    os << "d1: M*diag(lambda)*G + homogeneous of dimension " << report.d1_homogeneous_dim << "\n";
    return os.str();
}

}  // namespace evoternary
