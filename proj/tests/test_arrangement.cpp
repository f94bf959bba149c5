#include <doctest.h>

#include "arrmod/arrangement.hpp"
#include "arrmod/checks.hpp"

using namespace arrmod;

TEST_CASE("build normalizes forms and records the matrix") {
    auto fs = parse_product("(2*x+4*y)*z", default_var_names(3));
    Arrangement a = Arrangement::build(fs, 3);
    CHECK(a.dimension() == 3);
    CHECK(a.size() == 2);
    CHECK(a.central());
    CHECK(poly_to_string(a.forms()[0], a.var_names()) == "x + 2*y");
    CHECK(a.coefficients() == IntMatrix(3, 2, {1, 0, 2, 0, 0, 1}));

    Arrangement skew = checks::fixture("skew5");
    CHECK(skew.size() == 5);
    CHECK(poly_to_string(skew.forms()[4], skew.var_names()) == "8*x + 2*y + 5*z");
}

TEST_CASE("duplicates are rejected with the offending pair") {
    auto fs = parse_product("x*y*(3*x)", default_var_names(2));
    try {
        Arrangement::build(fs, 2);
        FAIL("duplicate not detected");
    } catch (const DuplicateHyperplaneError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 2);
    }
    // same hyperplane written with a scaled constant
    auto affine = parse_product("(x-1)*(2*x-2)", default_var_names(1));
    CHECK_THROWS_AS(Arrangement::build(affine, 1), DuplicateHyperplaneError);
    // parallel but distinct hyperplanes are fine
    auto parallel = parse_product("(x-1)*(x-2)", default_var_names(1));
    CHECK(Arrangement::build(parallel, 1).size() == 2);
}

TEST_CASE("degenerate forms are rejected") {
    Poly sq = Poly::variable(2, 0, lex_order()) * Poly::variable(2, 0, lex_order());
    CHECK_THROWS_AS(Arrangement::build({sq}, 2), DomainError);
    CHECK_THROWS_AS(Arrangement::build({Poly::constant(2, 5, lex_order())}, 2), DomainError);
    CHECK_THROWS_AS(Arrangement::build({Poly(2, lex_order(), 0)}, 2), DomainError);
}

TEST_CASE("coning adds the hyperplane at infinity") {
    Arrangement affine = checks::fixture("affine3"); // {x, x-1, y} in Q^2
    CHECK(!affine.central());
    Arrangement c = cone(affine);
    CHECK(c.central());
    CHECK(c.dimension() == 3);
    CHECK(c.size() == 4);
    CHECK(c.var_names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(poly_to_string(c.forms()[0], c.var_names()) == "x");
    CHECK(poly_to_string(c.forms()[1], c.var_names()) == "x - z");
    CHECK(poly_to_string(c.forms()[3], c.var_names()) == "z");
    CHECK(is_essential(c));

    // coning a central arrangement still appends the extra coordinate
    Arrangement cc = cone(checks::fixture("coords3"));
    CHECK(cc.dimension() == 4);
    CHECK(cc.size() == 4);
}

TEST_CASE("coned matrix layout") {
    Arrangement affine = checks::fixture("affine3");
    IntMatrix m = affine.coned_matrix();
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 4);
    // columns: x, x-1, y, and the new coordinate; constants sit in the last row
    CHECK(m == IntMatrix(3, 4, {1, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1}));
}

TEST_CASE("essentiality three ways") {
    CHECK(is_essential(checks::fixture("coords3")));
    CHECK(!is_essential(checks::fixture("braid3")));
    CHECK(is_essential(checks::fixture("affine3")));
    CHECK(is_essential(checks::fixture("single1")));
}

TEST_CASE("vertex tuples over Q and mod p") {
    Arrangement mix = checks::fixture("mix5");
    TupleSet t = vertex_tuples(mix);
    CHECK(t.arity == 3);
    CHECK(t.universe == 5);
    CHECK(t.tuples.size() == 9); // all triples except {x, y, x+y}
    for (const auto& s : t.tuples) CHECK(s != std::vector<int>{0, 1, 3});

    TupleSet t2 = vertex_tuples_mod(mix, 2);
    CHECK(t2.tuples.size() == 8); // additionally loses {x, z, x+2y+z}
    std::vector<std::vector<int>> lost;
    for (const auto& s : t.tuples)
        if (std::find(t2.tuples.begin(), t2.tuples.end(), s) == t2.tuples.end())
            lost.push_back(s);
    CHECK(lost == std::vector<std::vector<int>>{{0, 2, 4}});

    TupleSet t3 = vertex_tuples(reduce_mod(mix, 3));
    CHECK(t3 == t);

    CHECK_THROWS_AS(vertex_tuples(checks::fixture("affine3")), NonCentralError);
}

TEST_CASE("projective tuples detect essentiality") {
    Arrangement braid = checks::fixture("braid3");
    TupleSet t = projective_tuples(braid);
    CHECK(t.arity == 4);
    CHECK(t.universe == 4); // coned hyperplanes
    CHECK(t.full());        // non-essential: every tuple stays in

    Arrangement coords = checks::fixture("coords3");
    CHECK(!projective_tuples(coords).full());
}

TEST_CASE("good primes and the reduction witness") {
    Arrangement skew = checks::fixture("skew5");
    try {
        reduce_mod(skew, 2);
        FAIL("p=2 must be rejected");
    } catch (const NotGoodError& e) {
        CHECK(e.p == 2);
        CHECK(e.i == 0); // z and 4x+z both reduce to z
        CHECK(e.j == 1);
        CHECK(std::string(e.what()).find("1 and 2") != std::string::npos);
    }
    ModularArrangement m = reduce_mod(skew, 3);
    CHECK(m.p == 3);
    CHECK(m.n == 5);
    CHECK(poly_to_string(m.forms[1], skew.var_names()) == "x + z");

    CHECK_THROWS_AS(reduce_mod(skew, 4), DomainError);
    CHECK_THROWS_AS(reduce_mod(checks::fixture("affine3"), 3), NonCentralError);
}

TEST_CASE("subset rank and dimension") {
    Arrangement affine = checks::fixture("affine3"); // {x, x-1, y}
    const IntMatrix& c = affine.coefficients();
    const std::vector<Int>& k = affine.constants();
    CHECK(subset_dim(c, k, {0, 1}, 2, 0) == -1); // parallel: empty intersection
    CHECK(subset_dim(c, k, {0, 2}, 2, 0) == 0);
    CHECK(subset_dim(c, k, {0, 1, 2}, 2, 0) == -1);
    CHECK(subset_dim(c, k, {}, 2, 0) == 2);

    Arrangement mix = checks::fixture("mix5");
    CHECK(subset_rank(mix.coefficients(), {0, 1, 3}, 0) == 2);
    CHECK(subset_rank(mix.coefficients(), {0, 2, 4}, 0) == 3);
    CHECK(subset_rank(mix.coefficients(), {0, 2, 4}, 2) == 2);
}

TEST_CASE("seeded corpus is deterministic and well-formed") {
    auto a = checks::random_central_essential(7, 10);
    auto b = checks::random_central_essential(7, 10);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].coefficients() == b[i].coefficients());
        CHECK(a[i].central());
        CHECK(is_essential(a[i]));
        CHECK(a[i].dimension() <= 3);
        CHECK(a[i].size() <= 6);
    }
}
