#include <doctest.h>

#include "arrmod/checks.hpp"
#include "arrmod/intmat.hpp"

using namespace arrmod;

TEST_CASE("hermite form of a 2x2") {
    IntMatrix m(2, 2, {1, 1, 1, -1});
    HnfResult r = hnf(m);
    CHECK(r.h == IntMatrix(2, 2, {1, 0, 1, 2}));
    CHECK(m * r.u == r.h);
    CHECK(abs(det(r.u)) == 1);

    IntMatrix m2(2, 2, {2, 2, 1, -1});
    HnfResult r2 = hnf(m2);
    CHECK(r2.h == IntMatrix(2, 2, {2, 0, 1, 2}));
    CHECK(m2 * r2.u == r2.h);
}

TEST_CASE("hermite form keeps zero columns last") {
    IntMatrix m(2, 3, {3, 6, 3, 1, 2, 1});
    HnfResult r = hnf(m);
    CHECK(m * r.u == r.h);
    // rank 1: a single pivot column
    for (int i = 0; i < 2; ++i)
        for (int j = 1; j < 3; ++j) CHECK(r.h.at(i, j) == 0);
    CHECK(r.h.at(0, 0) == 3);
}

TEST_CASE("smith form golden") {
    IntMatrix m(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
    SmithResult s = snf(m);
    CHECK(s.d == std::vector<Int>{2, 6, 12});
    IntMatrix d(3, 3);
    for (int i = 0; i < 3; ++i) d.at(i, i) = s.d[i];
    CHECK(s.s * m * s.t == d);
    CHECK(abs(det(s.s)) == 1);
    CHECK(abs(det(s.t)) == 1);
}

TEST_CASE("smith form of a column vector") {
    IntMatrix m(3, 1, {6, 10, 15});
    CHECK(snf(m).d == std::vector<Int>{1});
    IntMatrix m2(3, 1, {6, 10, 14});
    CHECK(snf(m2).d == std::vector<Int>{2});
}

TEST_CASE("determinant and rank") {
    CHECK(det(IntMatrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})) == -3);
    CHECK(det(IntMatrix(2, 2, {2, 4, 1, 2})) == 0);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), NonSquareError);

    CHECK(rank_rational(IntMatrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
    CHECK(rank_rational(IntMatrix(2, 3, {1, 0, 0, 0, 0, 0})) == 1);
}

TEST_CASE("rank over a prime field") {
    IntMatrix m(2, 2, {1, 1, 1, -1});
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 2);
    // negative entries reduce into [0, p); m2 is singular (rows proportional)
    IntMatrix m2(2, 2, {-1, 4, 2, -8});
    CHECK(rank_mod_p(m2, 5) == 1);
    CHECK(rank_mod_p(m2, 3) == 1);
    IntMatrix m3(2, 2, {-1, 4, 2, -7}); // det -1, full rank mod every prime
    CHECK(rank_mod_p(m3, 3) == 2);
    CHECK(rank_mod_p(m3, 5) == 2);
}

TEST_CASE("smith invariants match the minor-gcd oracle") {
    Rng rng(2024);
    for (int iter = 0; iter < 50; ++iter) {
        int rows = static_cast<int>(rng.uniform(1, 4));
        int cols = static_cast<int>(rng.uniform(1, 4));
        IntMatrix m = checks::random_matrix(rng, rows, cols, 9);
        CHECK(snf(m).d == checks::minor_gcd_invariants(m));
    }
}

TEST_CASE("selected columns and transpose") {
    IntMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(m.selected_columns({0, 2}) == IntMatrix(2, 2, {1, 3, 4, 6}));
    CHECK(m.transposed() == IntMatrix(3, 2, {1, 4, 2, 5, 3, 6}));
}
