#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrmod/arith.hpp"

namespace arrmod {

using Monomial = std::vector<unsigned>; // exponent vector, length = nvars

unsigned total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, assumes a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, DegRevLex };

// monomial order with x1 > x2 > ... > xl
struct TermOrder {
    OrderKind kind = OrderKind::Lex;
    int compare(const Monomial& a, const Monomial& b) const; // <0, 0, >0
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool operator==(const TermOrder& o) const { return kind == o.kind; }
};
TermOrder lex_order();
TermOrder degrevlex_order();
std::optional<TermOrder> order_from_name(const std::string& name);
std::string order_name(TermOrder o);

struct MonoGreater {
    TermOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

// sparse polynomial; modulus 0 means coefficients in Z, otherwise in F_p with
// representatives in [0, p).  Terms iterate in decreasing monomial order.
class Poly {
public:
    using TermMap = std::map<Monomial, Int, MonoGreater>;

    Poly() : Poly(0, lex_order(), 0) {}
    Poly(int nvars, TermOrder order, long modulus = 0)
        : nvars_(nvars), modulus_(modulus), terms_(MonoGreater{order}) {}
    static Poly constant(int nvars, const Int& c, TermOrder order, long modulus = 0);
    static Poly variable(int nvars, int var, TermOrder order, long modulus = 0);

    int nvars() const { return nvars_; }
    long modulus() const { return modulus_; }
    TermOrder order() const { return terms_.key_comp().order; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const; // total degree; 0 for the zero polynomial
    Int coeff(const Monomial& m) const;

    const Monomial& leading_term() const;     // throws DomainError on zero
    const Int& leading_coefficient() const;   // throws DomainError on zero
    std::pair<Monomial, Int> leading_monomial() const;

    void add_term(const Monomial& m, const Int& c); // accumulates, normalizes

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly times_term(const Int& c, const Monomial& m) const; // c * x^m * this
    Poly with_order(TermOrder order) const;

private:
    int nvars_;
    long modulus_;
    TermMap terms_;

    Int normal(const Int& c) const;
    void check_compatible(const Poly& o) const;
};

Poly partial_derivative(const Poly& f, int var);
Int content(const Poly& f); // gcd of coefficients, 0 for the zero polynomial
// f / content, sign fixed so the leading coefficient is positive
Poly primitive_part(const Poly& f);
Poly reduce_mod_p(const Poly& f, long p);

// parses the linear-product grammar; returns factors in textual order.
//   product := factor ('*' factor)*
//   factor  := term | '(' sum ')'
//   sum     := signed-term (('+'|'-') term)*
//   term    := [integer '*'] variable | integer
// every factor must come out with total degree exactly 1
std::vector<Poly> parse_product(const std::string& input, const std::vector<std::string>& vars,
                                TermOrder order = lex_order());

std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

std::vector<std::string> default_var_names(int l);

} // namespace arrmod
