#pragma once

#include <optional>
#include <vector>

#include "evoternary/evolalg.hpp"
#include "evoternary/rng.hpp"

namespace evoternary {

/// The map e_i -> scalars[i] * e_{sigma[i]}: as a matrix, column i carries
/// scalars[i] at row sigma[i]. sigma is 0-indexed internally; JSON uses
/// 1-indexed one-line notation.
struct MonomialMap {
    std::vector<std::size_t> sigma;
    Vec scalars;  // all nonzero
};

struct TautTriple {
    Matrix f1, f2, f3;
};

struct TautDecomposition {
    std::vector<std::size_t> sigma;
    Vec lambda;
    Vec mu;
};

enum class TautDecomposeFailure { F2NotMonomial, F3NotMonomial, PermutationMismatch, F1Mismatch };

/// Decomposition failures are reported distinctly: each indicates the triple
/// is not of the monomial shape valid triples have on perfect algebras.
class TautDecomposeError : public std::runtime_error {
public:
    TautDecomposeError(TautDecomposeFailure kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    TautDecomposeFailure kind() const { return kind_; }

private:
    TautDecomposeFailure kind_;
};

Matrix monomial_matrix(const FieldSpec& field, const MonomialMap& m);

/// Recovers (sigma, scalars) when the matrix has exactly one nonzero entry in
/// every row and column; nullopt otherwise.
std::optional<MonomialMap> extract_monomial(const Matrix& m);

/// f2 = monomial(sigma, lambda), f3 = monomial(sigma, mu), and f1 = M Q M^{-1}
/// with Q = monomial(sigma, lambda .* mu), so that f1(e_i^2) is
/// lambda_i mu_i e_{sigma(i)}^2. Requires a perfect algebra and nonzero scalars.
TautTriple make_taut(const EvolutionAlgebra& A, const std::vector<std::size_t>& sigma,
                     const Vec& lambda, const Vec& mu);

/// True iff all three matrices are invertible and f1(e_i e_j) = f2(e_i) f3(e_j)
/// for all basis pairs. Works for any algebra, perfect or not.
bool verify_taut(const EvolutionAlgebra& A, const TautTriple& t);

/// Inverse of make_taut. f1 is never trusted: it is recomputed from (sigma,
/// lambda, mu) and compared. Requires a perfect algebra.
TautDecomposition decompose_taut(const EvolutionAlgebra& A, const TautTriple& t);

/// Componentwise matrix product / inverse; both preserve the defining identity.
TautTriple compose_taut(const TautTriple& s, const TautTriple& t);
TautTriple invert_taut(const TautTriple& t);

std::vector<std::size_t> sample_permutation(SeededRng& rng, std::size_t n);

/// Seeded random triple: permutation (unless given), then nonzero lambda, mu.
TautTriple sample_taut(const EvolutionAlgebra& A, SeededRng& rng,
                       const std::optional<std::vector<std::size_t>>& sigma = std::nullopt);

}  // namespace evoternary
