#include <doctest.h>

#include "arrmod/strong_gb.hpp"

using namespace arrmod;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly one_form(const std::string& s, TermOrder o = lex_order()) {
    auto v = parse_product(s, XYZ, o);
    REQUIRE(v.size() == 1);
    return v[0];
}
} // namespace

TEST_CASE("extended gcd picks canonical cofactors") {
    auto at = [](long a, long b) { return extended_gcd(Int(a), Int(b)); };
    // a divides b: (sign a, 0)
    CHECK(at(2, 2).alpha == 1);
    CHECK(at(2, 2).beta == 0);
    CHECK(at(2, 4).alpha == 1);
    CHECK(at(2, 4).beta == 0);
    CHECK(at(-2, 4).alpha == -1);
    CHECK(at(-2, 4).beta == 0);
    // b divides a strictly: (0, sign b)
    CHECK(at(4, 2).alpha == 0);
    CHECK(at(4, 2).beta == 1);
    CHECK(at(4, -2).beta == -1);
    // general case: minimal |alpha|, ties broken toward alpha*a >= 0
    CHECK(at(4, 6).d == 2);
    CHECK(at(4, 6).alpha == -1);
    CHECK(at(4, 6).beta == 1);
    CHECK(at(-4, 6).alpha == 1);
    CHECK(at(-4, 6).beta == 1);
    CHECK(at(6, 4).alpha == 1);
    CHECK(at(6, 4).beta == -1);
    for (long a : {-9L, -4L, 3L, 8L})
        for (long b : {-6L, 5L, 7L, 12L}) {
            Bezout bz = extended_gcd(Int(a), Int(b));
            CHECK(bz.alpha * a + bz.beta * b == bz.d);
            CHECK(bz.d > 0);
        }
}

TEST_CASE("s- and g-polynomial goldens") {
    Poly f = one_form("2*x+y"), g = one_form("2*x-y");
    CHECK(poly_to_string(s_polynomial(f, g), XYZ) == "2*y");
    CHECK(g_polynomial(f, g) == f); // lc(f) divides lc(g)

    // <4x, 6y>: gcd 2 needs both generators
    Poly a = one_form("4*x"), b = one_form("6*y");
    Poly gp = g_polynomial(a, b);
    CHECK(poly_to_string(gp, XYZ) == "2*x*y");
    CHECK(poly_to_string(s_polynomial(a, b), XYZ) == "0");
}

TEST_CASE("strong reduction divides coefficients too") {
    std::vector<Poly> basis{one_form("2*x")};
    CHECK(poly_to_string(strong_reduce(one_form("3*x+y"), basis, lex_order()), XYZ) ==
          "3*x + y"); // 2 does not divide 3
    CHECK(poly_to_string(strong_reduce(one_form("4*x+y"), basis, lex_order()), XYZ) == "y");
    CHECK(strong_reduce(Poly(3, lex_order(), 0), basis, lex_order()).is_zero());
}

TEST_CASE("pair ideal golden basis") {
    std::vector<Poly> gens{one_form("x+y"), one_form("x+3*y+z")};
    StrongBasis b = strong_groebner(gens, lex_order());
    REQUIRE(b.generators.size() == 2);
    CHECK(poly_to_string(b.generators[0], XYZ) == "x + y");
    CHECK(poly_to_string(b.generators[1], XYZ) == "2*y + z");
    CHECK(b.leading_ledger[0].first == 1);
    CHECK(b.leading_ledger[1].first == 2);
    CHECK(monomial_to_string(b.leading_ledger[1].second, XYZ) == "y");
    CHECK(lucky_excluded_primes(gens, lex_order()) == std::set<long>{2});
}

TEST_CASE("non-principal coefficient ideal needs a degree jump") {
    std::vector<Poly> gens{one_form("2*x+y"), one_form("2*x-y")};
    StrongBasis b = strong_groebner(gens, lex_order());
    REQUIRE(b.generators.size() == 3);
    CHECK(poly_to_string(b.generators[0], XYZ) == "2*x + y");
    CHECK(poly_to_string(b.generators[1], XYZ) == "y^2");
    CHECK(poly_to_string(b.generators[2], XYZ) == "2*y");
    CHECK(lucky_excluded_primes(gens, lex_order()) == std::set<long>{2});
}

TEST_CASE("verification certifies good bases and flags tampering") {
    std::vector<Poly> gens{one_form("x+y"), one_form("x+3*y+z")};
    GBOptions opt;
    opt.track_cofactors = true;
    StrongBasis b = strong_groebner(gens, lex_order(), opt);
    CHECK(verify_strong_basis(b, gens, lex_order()).ok);

    StrongBasis missing = b;
    missing.generators.pop_back();
    missing.leading_ledger.pop_back();
    missing.cofactors.pop_back();
    CHECK(!verify_strong_basis(missing, gens, lex_order()).ok);

    StrongBasis scaled = b;
    scaled.generators[1] = scaled.generators[1] + scaled.generators[1]; // 4y + 2z
    scaled.leading_ledger[1].first = 4;
    CHECK(!verify_strong_basis(scaled, gens, lex_order()).ok);

    StrongBasis wrong_cof = b;
    wrong_cof.cofactors[0][0] = wrong_cof.cofactors[0][0] + Poly::constant(3, 1, lex_order());
    CHECK(!verify_strong_basis(wrong_cof, gens, lex_order()).ok);
}

TEST_CASE("membership through strong normal forms") {
    std::vector<Poly> gens{one_form("x+y"), one_form("x+3*y+z")};
    CHECK(ideal_membership(one_form("2*y+z"), gens, lex_order()));
    CHECK(ideal_membership(one_form("3*x+3*y"), gens, lex_order()));
    CHECK(!ideal_membership(one_form("y"), gens, lex_order()));
    CHECK(!ideal_membership(one_form("x"), gens, lex_order()));
    CHECK(ideal_membership(Poly(3, lex_order(), 0), gens, lex_order()));
}

TEST_CASE("pair strategies give the same minimal basis") {
    std::vector<Poly> gens{one_form("4*x+y"), one_form("6*x+z"), one_form("2*x+y+z")};
    GBOptions fifo;
    fifo.strategy = GBOptions::PairStrategy::Fifo;
    StrongBasis a = strong_groebner(gens, lex_order());
    StrongBasis b = strong_groebner(gens, lex_order(), fifo);
    CHECK(a.generators == b.generators);
    CHECK(a.leading_ledger == b.leading_ledger);
}

TEST_CASE("degree cap trips the budget guard") {
    std::vector<Poly> gens{one_form("2*x+y"), one_form("2*x-y")};
    GBOptions opt;
    opt.degree_cap = 1;
    CHECK_THROWS_AS(strong_groebner(gens, lex_order(), opt), BudgetError);
}

TEST_CASE("zero and empty inputs") {
    StrongBasis b = strong_groebner({}, lex_order());
    CHECK(b.generators.empty());
    std::vector<Poly> gens{Poly(3, lex_order(), 0), one_form("x")};
    StrongBasis c = strong_groebner(gens, lex_order());
    REQUIRE(c.generators.size() == 1);
    CHECK(poly_to_string(c.generators[0], XYZ) == "x");
}
