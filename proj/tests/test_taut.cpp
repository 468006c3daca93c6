#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "evoternary/taut.hpp"
#include "testsupport.hpp"

using namespace evoternary;
using test::alg;
using test::mat;
using test::mati;
using test::random_perfect;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

EvolutionAlgebra a0() { return alg(Q, {{0, 0}, {0, 0}}); }
EvolutionAlgebra a1() { return alg(Q, {{1, 0}, {0, 1}}); }
EvolutionAlgebra swap2() { return alg(Q, {{0, 1}, {1, 0}}); }

Vec qvec(std::initializer_list<int64_t> xs) {
    Vec v;
    for (int64_t x : xs) v.push_back(Q.from_int(x));
    return v;
}

bool triple_eq(const TautTriple& a, const TautTriple& b) {
    return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3;
}

}  // namespace

TEST_CASE("monomial matrix layout") {
    const MonomialMap m{{1, 0}, qvec({2, 3})};
    const Matrix M = monomial_matrix(Q, m);
    CHECK(M == mati(Q, {{0, 3}, {2, 0}}));  // column i holds scalars[i] at row sigma[i]

    CHECK(monomial_matrix(Q, {{0, 1}, qvec({1, 1})}) == Matrix::identity(Q, 2));
    CHECK_THROWS_AS(monomial_matrix(Q, {{0, 0}, qvec({1, 1})}), InvariantError);
    CHECK_THROWS_AS(monomial_matrix(Q, {{0, 2}, qvec({1, 1})}), InvariantError);
    CHECK_THROWS_AS(monomial_matrix(Q, {{0, 1}, qvec({1, 0})}), InvariantError);
    CHECK_THROWS_AS(monomial_matrix(Q, {{0, 1}, qvec({1})}), InvariantError);
}

TEST_CASE("extract_monomial inverts monomial_matrix") {
    SeededRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const FieldSpec& F = trial % 2 ? Q : F7;
        const std::size_t n = 1 + rng.below(5);
        MonomialMap m{sample_permutation(rng, n), Vec(n, F.zero())};
        for (std::size_t i = 0; i < n; ++i) m.scalars[i] = F.sample(rng, true);
        const auto back = extract_monomial(monomial_matrix(F, m));
        REQUIRE(back.has_value());
        CHECK(back->sigma == m.sigma);
        CHECK(back->scalars == m.scalars);
    }
}

TEST_CASE("extract_monomial rejects non-monomial shapes") {
    CHECK_FALSE(extract_monomial(mati(Q, {{1, 1}, {0, 1}})).has_value());
    CHECK_FALSE(extract_monomial(mati(Q, {{1, 0}, {0, 0}})).has_value());  // zero column
    CHECK_FALSE(extract_monomial(mati(Q, {{1, 1}, {0, 0}})).has_value());  // row reused
    CHECK_FALSE(extract_monomial(Matrix(Q, 2, 3)).has_value());
    CHECK(extract_monomial(mati(Q, {{5}})).has_value());
}

TEST_CASE("make_taut on the diagonal algebra") {
    const TautTriple t = make_taut(a1(), {0, 1}, qvec({2, 3}), qvec({5, 7}));
    CHECK(t.f2 == Matrix::diagonal(Q, qvec({2, 3})));
    CHECK(t.f3 == Matrix::diagonal(Q, qvec({5, 7})));
    CHECK(t.f1 == Matrix::diagonal(Q, qvec({10, 21})));
    CHECK(verify_taut(a1(), t));

    const TautTriple id = make_taut(a1(), {0, 1}, qvec({1, 1}), qvec({1, 1}));
    CHECK(id.f1 == Matrix::identity(Q, 2));
    CHECK(id.f2 == Matrix::identity(Q, 2));
    CHECK(id.f3 == Matrix::identity(Q, 2));
}

TEST_CASE("make_taut conjugates the scalar product through the structure") {
    // M swaps basis squares, so f1 picks up the swapped products.
    const TautTriple t = make_taut(swap2(), {0, 1}, qvec({2, 3}), qvec({5, 7}));
    CHECK(t.f1 == Matrix::diagonal(Q, qvec({21, 10})));
    CHECK(verify_taut(swap2(), t));

    // A transposition with unit scalars turns f1 into the permutation matrix.
    const TautTriple p = make_taut(a1(), {1, 0}, qvec({1, 1}), qvec({1, 1}));
    CHECK(p.f1 == mati(Q, {{0, 1}, {1, 0}}));
    CHECK(verify_taut(a1(), p));
}

TEST_CASE("make_taut input validation") {
    CHECK_THROWS_AS(make_taut(a1(), {0, 1}, qvec({0, 1}), qvec({1, 1})), InvariantError);
    CHECK_THROWS_AS(make_taut(a1(), {0, 1}, qvec({1, 1}), qvec({1, 0})), InvariantError);
    CHECK_THROWS_AS(make_taut(a1(), {0, 0}, qvec({1, 1}), qvec({1, 1})), InvariantError);
    CHECK_THROWS_AS(make_taut(a1(), {0, 1}, qvec({1}), qvec({1, 1})), InvariantError);
    CHECK_THROWS_AS(make_taut(a0(), {0, 1}, qvec({1, 1}), qvec({1, 1})), PerfectRequiredError);
}

TEST_CASE("verify_taut checks the multiplicative identity") {
    const Matrix id = Matrix::identity(Q, 2);
    CHECK(verify_taut(a1(), {id, id, id}));
    CHECK_FALSE(verify_taut(a1(), {id, id, id.scaled(Q.from_int(2))}));
    CHECK_FALSE(verify_taut(a1(), {id, mati(Q, {{1, 1}, {0, 1}}), id}));
    CHECK_FALSE(verify_taut(a1(), {id, Matrix::diagonal(Q, qvec({1, 0})), id}));

    // Non-perfect algebras still admit verification; identity works on the
    // zero algebra because every product is zero.
    CHECK(verify_taut(a0(), {id, id, id}));
    CHECK_THROWS_AS(verify_taut(a1(), TautTriple{Matrix(Q, 3, 3), Matrix(Q, 3, 3), Matrix(Q, 3, 3)}),
                    InvariantError);
}

TEST_CASE("decompose_taut inverts make_taut") {
    SeededRng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const FieldSpec& F = trial % 2 ? Q : F7;
        const std::size_t n = 1 + rng.below(5);
        const EvolutionAlgebra A = random_perfect(rng, F, n);
        const auto sigma = sample_permutation(rng, n);
        Vec lambda(n, F.zero()), mu(n, F.zero());
        for (std::size_t i = 0; i < n; ++i) lambda[i] = F.sample(rng, true);
        for (std::size_t i = 0; i < n; ++i) mu[i] = F.sample(rng, true);

        const TautTriple t = make_taut(A, sigma, lambda, mu);
        CHECK(verify_taut(A, t));
        const TautDecomposition d = decompose_taut(A, t);
        CHECK(d.sigma == sigma);
        CHECK(d.lambda == lambda);
        CHECK(d.mu == mu);
    }
}

TEST_CASE("decompose_taut failure kinds") {
    const EvolutionAlgebra A = a1();
    const TautTriple good = make_taut(A, {1, 0}, qvec({2, 3}), qvec({5, 7}));

    TautTriple bad2 = good;
    bad2.f2 = mati(Q, {{1, 1}, {0, 1}});
    CHECK_THROWS_WITH_AS(decompose_taut(A, bad2), "f2 is not monomial", TautDecomposeError);
    try {
        decompose_taut(A, bad2);
    } catch (const TautDecomposeError& e) {
        CHECK(e.kind() == TautDecomposeFailure::F2NotMonomial);
    }

    TautTriple bad3 = good;
    bad3.f3 = mati(Q, {{1, 1}, {0, 1}});
    try {
        decompose_taut(A, bad3);
        FAIL("expected TautDecomposeError");
    } catch (const TautDecomposeError& e) {
        CHECK(e.kind() == TautDecomposeFailure::F3NotMonomial);
    }

    TautTriple mixed = good;
    mixed.f3 = Matrix::identity(Q, 2);  // sigma = id, but f2 carries the swap
    try {
        decompose_taut(A, mixed);
        FAIL("expected TautDecomposeError");
    } catch (const TautDecomposeError& e) {
        CHECK(e.kind() == TautDecomposeFailure::PermutationMismatch);
    }

    TautTriple tampered = good;
    tampered.f1 = good.f1.scaled(Q.from_int(2));
    try {
        decompose_taut(A, tampered);
        FAIL("expected TautDecomposeError");
    } catch (const TautDecomposeError& e) {
        CHECK(e.kind() == TautDecomposeFailure::F1Mismatch);
    }

    CHECK_THROWS_AS(decompose_taut(a0(), good), PerfectRequiredError);
}

TEST_CASE("composition and inversion preserve the group structure") {
    SeededRng rng(47);
    const EvolutionAlgebra A = random_perfect(rng, Q, 3);
    const Matrix id = Matrix::identity(Q, 3);

    const TautTriple s = sample_taut(A, rng);
    const TautTriple t = sample_taut(A, rng);
    const TautTriple u = sample_taut(A, rng);

    CHECK(verify_taut(A, compose_taut(s, t)));
    CHECK(verify_taut(A, invert_taut(s)));
    CHECK(triple_eq(compose_taut(s, invert_taut(s)), TautTriple{id, id, id}));
    CHECK(triple_eq(compose_taut(invert_taut(s), s), TautTriple{id, id, id}));
    CHECK(triple_eq(compose_taut(compose_taut(s, t), u), compose_taut(s, compose_taut(t, u))));

    // Parameters compose as sigma_c = sigma_s . sigma_t,
    // lambda_c[i] = lambda_s[sigma_t[i]] * lambda_t[i].
    const TautDecomposition ds = decompose_taut(A, s);
    const TautDecomposition dt = decompose_taut(A, t);
    const TautDecomposition dc = decompose_taut(A, compose_taut(s, t));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(dc.sigma[i] == ds.sigma[dt.sigma[i]]);
        CHECK(dc.lambda[i] == ds.lambda[dt.sigma[i]] * dt.lambda[i]);
        CHECK(dc.mu[i] == ds.mu[dt.sigma[i]] * dt.mu[i]);
    }

    CHECK_THROWS_AS(compose_taut(s, TautTriple{Matrix(Q, 2, 2), Matrix(Q, 2, 2), Matrix(Q, 2, 2)}),
                    InvariantError);
}

TEST_CASE("sample_permutation is deterministic and uniform-ish") {
    SeededRng r1(99), r2(99);
    CHECK(sample_permutation(r1, 6) == sample_permutation(r2, 6));

    SeededRng r3(1);
    CHECK(sample_permutation(r3, 1) == std::vector<std::size_t>{0});

    std::set<std::vector<std::size_t>> seen;
    SeededRng r4(5);
    for (int i = 0; i < 100; ++i) {
        auto p = sample_permutation(r4, 3);
        std::vector<std::size_t> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::size_t>{0, 1, 2});
        seen.insert(p);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("sample_taut determinism and constraints") {
    SeededRng r1(123), r2(123);
    const EvolutionAlgebra A = a1();
    CHECK(triple_eq(sample_taut(A, r1), sample_taut(A, r2)));

    SeededRng r3(7);
    for (int i = 0; i < 20; ++i) {
        const TautTriple t = sample_taut(A, r3);
        CHECK(verify_taut(A, t));
    }

    SeededRng r4(8);
    const std::vector<std::size_t> swap_sigma{1, 0};
    const TautTriple forced = sample_taut(A, r4, swap_sigma);
    CHECK(decompose_taut(A, forced).sigma == swap_sigma);

    SeededRng r5(9);
    CHECK_THROWS_AS(sample_taut(a0(), r5), PerfectRequiredError);
}
