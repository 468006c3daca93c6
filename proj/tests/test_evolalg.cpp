#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "evoternary/evolalg.hpp"
#include "testsupport.hpp"

using namespace evoternary;
using test::alg;
using test::fuzz_case;
using test::mati;

namespace {
const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(EvolutionAlgebra(mati(Q, {{1, 2, 3}, {4, 5, 6}})), InvariantError);
    CHECK_THROWS_AS(EvolutionAlgebra(Matrix(Q, 0, 0)), InvariantError);
    const EvolutionAlgebra one = alg(Q, {{3}});
    CHECK(one.dim() == 1);
    CHECK(one.unit(0) == Vec{Q.one()});
}

TEST_CASE("multiply follows the structure matrix columns") {
    // Column i holds the coordinates of e_i^2.
    const EvolutionAlgebra a21 = alg(Q, {{0, 1}, {1, 0}});
    CHECK(multiply(a21, a21.unit(0), a21.unit(0)) == Vec{Q.zero(), Q.one()});  // e1^2 = e2
    CHECK(multiply(a21, a21.unit(0), a21.unit(1)) == Vec{Q.zero(), Q.zero()});
    CHECK(multiply(a21, a21.unit(1), a21.unit(0)) == Vec{Q.zero(), Q.zero()});

    const EvolutionAlgebra a1 = alg(Q, {{1, 0}, {0, 1}});
    const Vec x{Q.one(), Q.one()};
    const Vec y{Q.one(), Q.from_int(-1)};
    CHECK(multiply(a1, x, y) == Vec{Q.one(), Q.from_int(-1)});  // e1^2 - e2^2

    CHECK_THROWS_AS(multiply(a1, Vec{Q.one()}, y), InvariantError);
}

TEST_CASE("multiply is symmetric") {
    SeededRng rng(31);
    for (std::size_t i = 0; i < 40; ++i) {
        const EvolutionAlgebra A = fuzz_case(5, i);
        Vec x, y;
        for (std::size_t k = 0; k < A.dim(); ++k) {
            x.push_back(A.field().sample(rng));
            y.push_back(A.field().sample(rng));
        }
        CHECK(multiply(A, x, y) == multiply(A, y, x));
    }
}

TEST_CASE("perfectness") {
    CHECK(is_perfect(alg(Q, {{1, 0}, {0, 1}})));
    CHECK_FALSE(is_perfect(alg(Q, {{0, 0}, {0, 0}})));
    CHECK(is_perfect(alg(Q, {{1, 2}, {3, 1}})));  // det = 1 - 6
    CHECK_FALSE(is_perfect(alg(Q, {{1, -1}, {-1, 1}})));
}

TEST_CASE("square analysis on proportional columns") {
    // e2^2 = 2 e1^2
    const EvolutionAlgebra A = alg(Q, {{1, 2}, {0, 0}});
    const SquareDecomposition sq = square_analysis(A);
    CHECK(sq.rank == 1);
    CHECK(sq.perm == std::vector<std::size_t>{0, 1});
    CHECK(sq.dependency.rows() == 1);
    CHECK(sq.dependency.cols() == 1);
    CHECK(sq.dependency.at(0, 0) == Q.from_int(2));
    CHECK_FALSE(sq.zero_square[0]);
    CHECK_FALSE(sq.zero_square[1]);
    CHECK_FALSE(sq.proportional_to[0].has_value());
    REQUIRE(sq.proportional_to[1].has_value());
    CHECK(sq.proportional_to[1]->first == 0);
    CHECK(sq.proportional_to[1]->second == Q.from_int(2));
}

TEST_CASE("square analysis with a zero square") {
    // e1^2 = 0, e2^2 = e1: pivot column is the second one.
    const EvolutionAlgebra A = alg(Q, {{0, 1}, {0, 0}});
    const SquareDecomposition sq = square_analysis(A);
    CHECK(sq.rank == 1);
    CHECK(sq.perm == std::vector<std::size_t>{1, 0});
    CHECK(sq.dependency.at(0, 0).is_zero());
    CHECK(sq.zero_square[0]);
    CHECK_FALSE(sq.zero_square[1]);
    CHECK_FALSE(sq.proportional_to[0].has_value());
    CHECK_FALSE(sq.proportional_to[1].has_value());
}

TEST_CASE("square analysis on the zero algebra") {
    const EvolutionAlgebra A = alg(Q, {{0, 0}, {0, 0}});
    const SquareDecomposition sq = square_analysis(A);
    CHECK(sq.rank == 0);
    CHECK(sq.dependency.cols() == 2);
    CHECK(sq.dependency.rows() == 0);
    CHECK(sq.zero_square == std::vector<bool>{true, true});
}

TEST_CASE("square analysis reports the smallest proportional pivot") {
    // Columns 1 and 3 proportional; column 2 independent of them.
    const EvolutionAlgebra A = alg(Q, {{1, 0, 3}, {2, 1, 6}, {0, 0, 0}});
    const SquareDecomposition sq = square_analysis(A);
    CHECK(sq.rank == 2);
    REQUIRE(sq.proportional_to[2].has_value());
    CHECK(sq.proportional_to[2]->first == 0);
    CHECK(sq.proportional_to[2]->second == Q.from_int(3));
    CHECK_FALSE(sq.proportional_to[1].has_value());
}

TEST_CASE("dependency columns reconstruct the dependent squares") {
    for (std::size_t i = 0; i < 60; ++i) {
        const EvolutionAlgebra A = fuzz_case(9, i);
        const SquareDecomposition sq = square_analysis(A);
        const Matrix& M = A.structure();
        const std::size_t n = A.dim(), r = sq.rank;
        CHECK(is_perfect(A) == (r == n));
        CHECK((sq.dependency.cols() == 0) == is_perfect(A));
        for (std::size_t c = 0; r + c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                FieldElement sum = A.field().zero();
                for (std::size_t j = 0; j < r; ++j)
                    sum += sq.dependency.at(j, c) * M.at(k, sq.perm[j]);
                CHECK(sum == M.at(k, sq.perm[r + c]));
            }
        }
    }
}

TEST_CASE("square analysis over a prime field") {
    // e2^2 = 3 e1^2 over F5
    const EvolutionAlgebra A = alg(F5, {{2, 6}, {1, 3}});
    const SquareDecomposition sq = square_analysis(A);
    CHECK(sq.rank == 1);
    REQUIRE(sq.proportional_to[1].has_value());
    CHECK(sq.proportional_to[1]->second == F5.from_int(3));
}
