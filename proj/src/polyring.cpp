#include "arrmod/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arrmod {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

TermOrder lex_order() { return TermOrder{OrderKind::Lex}; }
TermOrder degrevlex_order() { return TermOrder{OrderKind::DegRevLex}; }

std::optional<TermOrder> order_from_name(const std::string& name) {
    if (name == "lex") return lex_order();
    if (name == "degrevlex") return degrevlex_order();
    return std::nullopt;
}

std::string order_name(TermOrder o) { return o.kind == OrderKind::Lex ? "lex" : "degrevlex"; }

Poly Poly::constant(int nvars, const Int& c, TermOrder order, long modulus) {
    Poly f(nvars, order, modulus);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

Poly Poly::variable(int nvars, int var, TermOrder order, long modulus) {
    if (var < 0 || var >= nvars) throw DomainError("variable index out of range");
    Poly f(nvars, order, modulus);
    Monomial m(nvars, 0);
    m[var] = 1;
    f.add_term(m, 1);
    return f;
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Int Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

const Monomial& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Int& Poly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

std::pair<Monomial, Int> Poly::leading_monomial() const {
    return {leading_term(), leading_coefficient()};
}

Int Poly::normal(const Int& c) const {
    if (modulus_ == 0) return c;
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(modulus_));
    return r;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) != nvars_) throw DomainError("monomial has wrong variable count");
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second = normal(it->second + c);
    if (it->second == 0) terms_.erase(it);
}

void Poly::check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomials over different variable counts");
    if (modulus_ != o.modulus_) throw DomainError("polynomials over different coefficient rings");
}

Poly Poly::operator-() const {
    Poly r(nvars_, order(), modulus_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, normal(-c));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(nvars_, order(), modulus_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || modulus_ != o.modulus_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    if (order() == o.order())
        return std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
    for (const auto& [m, c] : terms_)
        if (o.coeff(m) != c) return false;
    return true;
}

Poly Poly::times_term(const Int& c, const Monomial& m) const {
    Poly r(nvars_, order(), modulus_);
    Int cn = normal(c);
    if (cn == 0) return r;
    // multiplication by a monomial preserves relative order
    for (const auto& [mm, cc] : terms_) {
        Int v = normal(cc * cn);
        if (v != 0) r.terms_.emplace_hint(r.terms_.end(), mono_mul(mm, m), v);
    }
    return r;
}

Poly Poly::with_order(TermOrder o) const {
    Poly r(nvars_, o, modulus_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
    return r;
}

Poly partial_derivative(const Poly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw DomainError("variable index out of range");
    Poly r(f.nvars(), f.order(), f.modulus());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Int content(const Poly& f) {
    Int g = 0;
    for (const auto& [m, c] : f.terms()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Poly primitive_part(const Poly& f) {
    if (f.is_zero()) return f;
    Int g = content(f);
    if (sgn(f.leading_coefficient()) < 0) g = -g;
    Poly r(f.nvars(), f.order(), f.modulus());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c / g);
    return r;
}

Poly reduce_mod_p(const Poly& f, long p) {
    if (!is_prime(p)) throw DomainError("reduce_mod_p: modulus must be prime");
    if (f.modulus() != 0) throw DomainError("reduce_mod_p: polynomial is already modular");
    Poly r(f.nvars(), f.order(), p);
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);
    return r;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_integer() {
        return std::isdigit(static_cast<unsigned char>(peek()));
    }
    bool at_ident() {
        return std::isalpha(static_cast<unsigned char>(peek()));
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return Int(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected a variable name", pos);
        return s.substr(start, pos - start);
    }
};

struct ProductParser {
    Lexer lx;
    const std::vector<std::string>& vars;
    TermOrder order;

    int var_index(const std::string& name, std::size_t at) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw ParseError("unknown variable '" + name + "'", at);
    }

    // term := [integer '*'] variable | integer
    Poly term() {
        const int n = static_cast<int>(vars.size());
        if (lx.at_integer()) {
            Int c = lx.integer();
            std::size_t save = lx.pos;
            if (lx.eat('*')) {
                if (lx.at_ident()) {
                    std::size_t at = lx.pos;
                    int v = var_index(lx.ident(), at);
                    return Poly::variable(n, v, order).times_term(c, Monomial(n, 0));
                }
                lx.pos = save; // the '*' separates product factors instead
            }
            return Poly::constant(n, c, order);
        }
        if (lx.at_ident()) {
            std::size_t at = lx.pos;
            int v = var_index(lx.ident(), at);
            return Poly::variable(n, v, order);
        }
        throw ParseError("expected a term", lx.pos);
    }

    // sum := signed-term (('+'|'-') term)*
    Poly sum() {
        Poly acc(static_cast<int>(vars.size()), order, 0);
        bool neg = lx.eat('-');
        Poly t = term();
        acc += neg ? -t : t;
        for (;;) {
            if (lx.eat('+'))
                acc += term();
            else if (lx.eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly factor() {
        if (lx.eat('(')) {
            Poly f = sum();
            if (!lx.eat(')')) throw ParseError("expected ')'", lx.pos);
            return f;
        }
        return term();
    }

    std::vector<Poly> product() {
        std::vector<Poly> out;
        out.push_back(checked(factor()));
        while (lx.eat('*')) out.push_back(checked(factor()));
        if (lx.peek() != '\0') throw ParseError("unexpected trailing input", lx.pos);
        return out;
    }

    Poly checked(Poly f) {
        if (f.is_zero()) throw ParseError("factor is identically zero", lx.pos);
        if (f.degree() != 1) throw ParseError("factor is not linear", lx.pos);
        return f;
    }
};

} // namespace

std::vector<Poly> parse_product(const std::string& input, const std::vector<std::string>& vars,
                                TermOrder order) {
    ProductParser p{Lexer{input}, vars, order};
    try {
        return p.product();
    } catch (const ParseError& product_err) {
        // a bare sum like "x+3*y+z" is a single factor without the parentheses
        ProductParser q{Lexer{input}, vars, order};
        try {
            Poly f = q.sum();
            if (q.lx.peek() != '\0') throw ParseError("unexpected trailing input", q.lx.pos);
            return {q.checked(std::move(f))};
        } catch (const ParseError&) {
            throw product_err;
        }
    }
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            a = abs(a);
        }
        if (total_degree(m) == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << monomial_to_string(m, vars);
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> default_var_names(int l) {
    static const char* alias[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < l; ++i) {
        if (l <= 4)
            names.push_back(alias[i]);
        else
            names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

} // namespace arrmod
