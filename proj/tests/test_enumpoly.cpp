#include <doctest.h>

#include "arrmod/checks.hpp"
#include "arrmod/enumpoly.hpp"
#include "arrmod/lattice.hpp"

using namespace arrmod;

namespace {
BivariatePoly X() { return BivariatePoly::var_x(); }
BivariatePoly Y() { return BivariatePoly::var_y(); }
BivariatePoly C(long v) { return BivariatePoly::constant(v); }
} // namespace

TEST_CASE("bivariate arithmetic basics") {
    BivariatePoly p = (X() + Y() - C(1)).pow(3);
    CHECK(p.degree_x() == 3);
    CHECK(p.degree_y() == 3);
    CHECK(p.coeff(3, 0) == 1);
    CHECK(p.coeff(1, 1) == -6);
    CHECK(p.coeff(0, 0) == -1);
    CHECK(p.eval_x(2) == std::vector<Int>{1, 3, 3, 1}); // (1+y)^3
    CHECK((p - p).is_zero());
    CHECK(C(0).is_zero());
}

TEST_CASE("tutte and coboundary goldens") {
    CHECK(tutte(checks::fixture("coords3")) == X().pow(3));
    CHECK(tutte(checks::fixture("braid3")) == X().pow(2) + X() + Y());
    CHECK(tutte(checks::fixture("single1")) == X());
    CHECK(coboundary(checks::fixture("coords3")) == (X() + Y() - C(1)).pow(3));
}

TEST_CASE("rank by subsets agrees with the central shortcut") {
    CHECK(arrangement_rank(checks::fixture("coords3")) == 3);
    CHECK(arrangement_rank(checks::fixture("braid3")) == 2);
    CHECK(arrangement_rank(checks::fixture("affine3")) == 2);
}

TEST_CASE("characteristic polynomial through the tutte route") {
    CHECK(char_from_tutte(checks::fixture("braid3")) == std::vector<Int>{0, 2, -3, 1});
    CHECK(char_from_tutte(checks::fixture("mix5")) == std::vector<Int>{-5, 9, -5, 1});
    CHECK(char_from_tutte(checks::fixture("affine3")) == std::vector<Int>{2, -3, 1});
    for (const checks::Fixture& f : checks::fixtures()) {
        Arrangement a = checks::fixture(f.name);
        CHECK(char_from_tutte(a) == characteristic_polynomial(build_lattice(a)));
    }
}

TEST_CASE("substitution identities round-trip") {
    for (const checks::Fixture& f : checks::fixtures()) {
        Arrangement a = checks::fixture(f.name);
        int rk = arrangement_rank(a);
        BivariatePoly t = tutte(a), cb = coboundary(a);
        CHECK(tutte_to_coboundary_identity(t, cb, rk));
        CHECK(coboundary_to_tutte_identity(t, cb, rk));
    }
}

TEST_CASE("point histograms count hyperplane incidences") {
    // x y z over F_3: a point lies on as many hyperplanes as it has zeros
    CHECK(hit_histogram(checks::fixture("coords3"), 3) == std::vector<Int>{8, 12, 6, 1});
    // two of three differences can never vanish alone
    CHECK(hit_histogram(checks::fixture("braid3"), 5) == std::vector<Int>{60, 60, 0, 5});
    CHECK(count_complement(checks::fixture("braid3"), 5) == 60);
    // composite moduli work pointwise
    CHECK(count_complement(checks::fixture("coords3"), 6) == 125);
    CHECK(count_complement(checks::fixture("braid3"), 4) == 24);
    CHECK(count_complement(checks::fixture("coords3"), 1) == 0);
}

TEST_CASE("histograms are independent of the thread count") {
    Arrangement mix = checks::fixture("mix5");
    auto h1 = hit_histogram(mix, 7, 1);
    auto h4 = hit_histogram(mix, 7, 4);
    auto h9 = hit_histogram(mix, 7, 9); // more workers than the modulus
    CHECK(h1 == h4);
    CHECK(h1 == h9);
}

TEST_CASE("point budget trips early") {
    CHECK_THROWS_AS(hit_histogram(checks::fixture("coords3"), 101, 0, 100),
                    BudgetError);
}

TEST_CASE("affine counting honors the constants") {
    // {x, x-1, y} over Z/5: x avoids 0 and 1, y avoids 0
    CHECK(count_complement(checks::fixture("affine3"), 5) == 3 * 4);
}

TEST_CASE("exact fit accepts true polynomials and rejects noise") {
    std::vector<std::pair<long, Int>> cubic;
    for (long q = 1; q <= 7; ++q) cubic.emplace_back(q, Int(q) * q * q - 3 * q + 1);
    auto fit = polynomial_fit(cubic, 3);
    REQUIRE(fit.has_value());
    CHECK((*fit)[3] == 1);
    CHECK((*fit)[1] == -3);
    CHECK((*fit)[0] == 1);
    CHECK((*fit)[2] == 0);

    std::vector<std::pair<long, Int>> noisy = {{1, 1}, {2, 8}, {3, 27}, {4, 64}, {5, 126}};
    CHECK(!polynomial_fit(noisy, 3).has_value());

    std::vector<std::pair<long, Int>> short_run = {{1, 1}, {2, 4}};
    CHECK_THROWS_AS(polynomial_fit(short_run, 3), DomainError); // too few samples
}

TEST_CASE("interpolated coboundary equals the subset expansion") {
    Arrangement mix = checks::fixture("mix5");
    CHECK(coboundary_from_counts(mix, {3, 5, 7, 11}) == coboundary(mix));
    Arrangement single = checks::fixture("single1");
    CHECK(coboundary_from_counts(single, {2, 3}) == X() + Y() - C(1));
}

TEST_CASE("finite-field route rejects unusable inputs") {
    Arrangement mix = checks::fixture("mix5");
    CHECK_THROWS_AS(coboundary_from_counts(mix, {3, 5, 7}), DomainError);    // need l+1
    CHECK_THROWS_AS(coboundary_from_counts(mix, {2, 3, 5, 7}), DomainError); // 2 not lucky
    CHECK_THROWS_AS(coboundary_from_counts(mix, {4, 5, 7, 11}), DomainError);
    CHECK_THROWS_AS(coboundary_from_counts(checks::fixture("braid3"), {2, 3, 5, 7}),
                    NonEssentialError);
    CHECK_THROWS_AS(coboundary_from_counts(checks::fixture("affine3"), {2, 3, 5}),
                    NonCentralError);
}

TEST_CASE("counts follow the characteristic polynomial at good lucky primes") {
    Arrangement skew = checks::fixture("skew5");
    auto chi = characteristic_polynomial(build_lattice(skew));
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        Int value = 0, pw = 1;
        for (const Int& c : chi) {
            value += c * pw;
            pw *= p;
        }
        CHECK(count_complement(skew, p) == value);
    }
}
