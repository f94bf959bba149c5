#include <doctest.h>

#include "arrmod/polyring.hpp"

using namespace arrmod;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly one_form(const std::string& s, TermOrder o = lex_order()) {
    auto v = parse_product(s, XYZ, o);
    REQUIRE(v.size() == 1);
    return v[0];
}
} // namespace

TEST_CASE("term orders disagree where they should") {
    // f = x + y^2: lex leads with x, degrevlex with y^2
    Poly y = Poly::variable(3, 1, lex_order());
    Poly f = Poly::variable(3, 0, lex_order()) + y * y;
    CHECK(monomial_to_string(f.leading_term(), XYZ) == "x");
    Poly g = f.with_order(degrevlex_order());
    CHECK(monomial_to_string(g.leading_term(), XYZ) == "y^2");

    // equal total degree: degrevlex prefers the smaller trailing exponent
    Monomial xz{1, 0, 1}, yy{0, 2, 0};
    CHECK(degrevlex_order().greater(yy, xz));
    CHECK(lex_order().greater(xz, yy));
}

TEST_CASE("parser accepts the factor grammar") {
    auto fs = parse_product("x*y*z", XYZ);
    REQUIRE(fs.size() == 3);
    CHECK(poly_to_string(fs[0], XYZ) == "x");
    CHECK(poly_to_string(fs[2], XYZ) == "z");

    fs = parse_product("(x-y)*(x-z)*(y-z)", XYZ);
    REQUIRE(fs.size() == 3);
    CHECK(poly_to_string(fs[1], XYZ) == "x - z");

    fs = parse_product("z*(4*x+z)*(2*x+y)", XYZ);
    REQUIRE(fs.size() == 3);
    CHECK(poly_to_string(fs[1], XYZ) == "4*x + z");

    // a bare sum is a single factor
    fs = parse_product("x+3*y+z", XYZ);
    REQUIRE(fs.size() == 1);
    CHECK(poly_to_string(fs[0], XYZ) == "x + 3*y + z");

    // integer coefficient binds tighter than the factor separator
    fs = parse_product("2*x*y", XYZ);
    REQUIRE(fs.size() == 2);
    CHECK(poly_to_string(fs[0], XYZ) == "2*x");

    fs = parse_product(" ( x - y ) * z ", XYZ);
    REQUIRE(fs.size() == 2);
    CHECK(poly_to_string(fs[0], XYZ) == "x - y");

    fs = parse_product("-x+y", XYZ);
    REQUIRE(fs.size() == 1);
    CHECK(poly_to_string(fs[0], XYZ) == "-x + y");
}

TEST_CASE("parser rejects what the grammar excludes") {
    CHECK_THROWS_AS(parse_product("x^2", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("x*(x+1", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("q+y", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("(x-x)*y", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("2*3", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("(x*y)", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("", XYZ), ParseError);
    CHECK_THROWS_AS(parse_product("x+", XYZ), ParseError);

    try {
        parse_product("q+y", XYZ);
    } catch (const ParseError& e) {
        CHECK(e.position == 0);
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
}

TEST_CASE("printing round-trips through the parser") {
    for (const char* s : {"x", "x - y", "4*x + z", "8*x + 2*y + 5*z", "-x + y", "x - 1",
                          "2*x + 3"}) {
        Poly f = one_form(s);
        CHECK(poly_to_string(f, XYZ) == s);
    }
}

TEST_CASE("derivative, content, primitive part") {
    // d/dx (x^2 y + 3 x z) = 2 x y + 3 z
    Poly x = Poly::variable(3, 0, lex_order());
    Poly f = x * x * Poly::variable(3, 1, lex_order()) +
             Poly::constant(3, 3, lex_order()) * x * Poly::variable(3, 2, lex_order());
    CHECK(poly_to_string(partial_derivative(f, 0), XYZ) == "2*x*y + 3*z");
    CHECK(partial_derivative(f, 1) == x * x);

    Poly g = one_form("2*x + 4*y");
    CHECK(content(g) == 2);
    CHECK(poly_to_string(primitive_part(g), XYZ) == "x + 2*y");
    Poly h = one_form("-2*x + 4*y");
    CHECK(poly_to_string(primitive_part(h), XYZ) == "x - 2*y"); // sign flips to a positive lead
    CHECK(content(Poly(3, lex_order(), 0)) == 0);
}

TEST_CASE("modular coefficient normalization") {
    Poly f = one_form("x + 3*y");
    Poly g = reduce_mod_p(f, 3);
    CHECK(g.modulus() == 3);
    CHECK(poly_to_string(g, XYZ) == "x");
    Poly h = reduce_mod_p(one_form("x - y"), 5); // -1 becomes 4
    CHECK(h.coeff(Monomial{0, 1, 0}) == 4);
}

TEST_CASE("default variable names") {
    CHECK(default_var_names(3) == std::vector<std::string>{"x", "y", "z"});
    CHECK(default_var_names(4) == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(default_var_names(5) ==
          std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
}

TEST_CASE("order names round-trip") {
    CHECK(order_name(lex_order()) == "lex");
    CHECK(order_name(degrevlex_order()) == "degrevlex");
    CHECK(order_from_name("lex").has_value());
    CHECK(order_from_name("degrevlex").has_value());
    CHECK(!order_from_name("grlex").has_value());
}
