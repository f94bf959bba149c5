#include "arrmod/arrangement.hpp"

#include <algorithm>

namespace arrmod {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// homogeneous coefficients and constant of a degree-<=1 polynomial
void split_form(const Poly& f, int l, std::vector<Int>& coeffs, Int& constant) {
    coeffs.assign(l, 0);
    constant = 0;
    for (const auto& [m, c] : f.terms()) {
        unsigned d = total_degree(m);
        if (d == 0) {
            constant = c;
        } else if (d == 1) {
            for (int k = 0; k < l; ++k)
                if (m[k] == 1) coeffs[k] = c;
        } else {
            throw DomainError("form of degree > 1");
        }
    }
}

bool proportional_over_q(const IntMatrix& aug, int i, int j) {
    for (int r = 0; r < aug.rows(); ++r)
        for (int s = r + 1; s < aug.rows(); ++s)
            if (aug.at(r, i) * aug.at(s, j) - aug.at(s, i) * aug.at(r, j) != 0) return false;
    return true;
}

std::string fresh_var_name(const std::vector<std::string>& vars) {
    auto taken = [&](const std::string& v) {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    };
    if (vars.size() < 4) {
        for (const char* c : {"x", "y", "z", "w"})
            if (!taken(c)) return c;
    }
    for (int k = static_cast<int>(vars.size()) + 1;; ++k) {
        std::string v = "x" + std::to_string(k);
        if (!taken(v)) return v;
    }
}

} // namespace

Arrangement Arrangement::build(const std::vector<Poly>& forms, int l,
                               std::vector<std::string> vars) {
    if (l < 1) throw DomainError("ambient dimension must be at least 1");
    Arrangement a;
    a.l_ = l;
    a.n_ = static_cast<int>(forms.size());
    a.coeffs_ = IntMatrix(l, a.n_);
    a.consts_.assign(a.n_, 0);
    a.vars_ = vars.empty() ? default_var_names(l) : std::move(vars);
    if (static_cast<int>(a.vars_.size()) != l) throw DomainError("variable name count must equal l");

    for (int i = 0; i < a.n_; ++i) {
        const Poly& f = forms[i];
        if (f.modulus() != 0) throw DomainError("arrangement forms must have integer coefficients");
        if (f.nvars() != l) throw DomainError("form has wrong variable count");
        if (f.is_zero()) throw DomainError("zero form");
        Poly g = primitive_part(f.with_order(lex_order()));
        std::vector<Int> col;
        Int constant;
        split_form(g, l, col, constant);
        bool linear = false;
        for (const Int& c : col) linear = linear || c != 0;
        if (!linear) throw DomainError("form has no linear part");
        a.forms_.push_back(g);
        for (int k = 0; k < l; ++k) a.coeffs_.at(k, i) = col[k];
        a.consts_[i] = constant;
        if (constant != 0) a.central_ = false;
    }

    // proportional columns (constants included) define the same hyperplane
    IntMatrix aug(l + 1, a.n_);
    for (int i = 0; i < a.n_; ++i) {
        for (int k = 0; k < l; ++k) aug.at(k, i) = a.coeffs_.at(k, i);
        aug.at(l, i) = a.consts_[i];
    }
    for (int i = 0; i < a.n_; ++i)
        for (int j = i + 1; j < a.n_; ++j)
            if (proportional_over_q(aug, i, j)) throw DuplicateHyperplaneError(i, j);
    return a;
}

Arrangement Arrangement::from_columns(const IntMatrix& coeffs, const std::vector<Int>& constants,
                                      std::vector<std::string> vars) {
    const int l = coeffs.rows(), n = coeffs.cols();
    if (!constants.empty() && static_cast<int>(constants.size()) != n)
        throw InputError("constants length must equal the number of columns");
    if (vars.empty()) vars = default_var_names(l);
    std::vector<Poly> forms;
    for (int i = 0; i < n; ++i) {
        Poly f(l, lex_order(), 0);
        for (int k = 0; k < l; ++k) {
            if (coeffs.at(k, i) == 0) continue;
            Monomial m(l, 0);
            m[k] = 1;
            f.add_term(m, coeffs.at(k, i));
        }
        if (!constants.empty() && constants[i] != 0) f.add_term(Monomial(l, 0), constants[i]);
        forms.push_back(f);
    }
    return build(forms, l, std::move(vars));
}

IntMatrix Arrangement::coned_matrix() const {
    IntMatrix m(l_ + 1, n_ + 1);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < l_; ++k) m.at(k, i) = coeffs_.at(k, i);
        m.at(l_, i) = consts_[i];
    }
    m.at(l_, n_) = 1;
    return m;
}

Arrangement cone(const Arrangement& a) {
    const int l = a.dimension();
    std::vector<std::string> vars = a.var_names();
    vars.push_back(fresh_var_name(vars));
    std::vector<Poly> forms;
    for (int i = 0; i < a.size(); ++i) {
        Poly f(l + 1, lex_order(), 0);
        for (int k = 0; k < l; ++k) {
            if (a.coefficients().at(k, i) == 0) continue;
            Monomial m(l + 1, 0);
            m[k] = 1;
            f.add_term(m, a.coefficients().at(k, i));
        }
        if (a.constants()[i] != 0) {
            Monomial m(l + 1, 0);
            m[l] = 1;
            f.add_term(m, a.constants()[i]);
        }
        forms.push_back(f);
    }
    forms.push_back(Poly::variable(l + 1, l, lex_order()));
    return Arrangement::build(forms, l + 1, std::move(vars));
}

bool is_essential(const Arrangement& a) {
    if (a.central()) return rank_rational(a.coefficients()) == a.dimension();
    for (const auto& s : subsets_of_size(a.size(), a.dimension()))
        if (subset_dim(a.coefficients(), a.constants(), s, a.dimension(), 0) == 0) return true;
    return false;
}

ModularArrangement reduce_mod(const Arrangement& a, long p) {
    if (!a.central()) throw NonCentralError();
    if (!is_prime(p)) throw DomainError("reduce requires a prime modulus");
    const IntMatrix& c = a.coefficients();
    const int l = a.dimension(), n = a.size();
    // p is good iff no pair of columns becomes proportional mod p; a vanishing
    // column is proportional to everything
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> pair{i, j};
            if (rank_mod_p(c.selected_columns(pair), p) < 2) throw NotGoodError(p, i, j);
        }
    ModularArrangement m;
    m.p = p;
    m.l = l;
    m.n = n;
    m.coeffs = IntMatrix(l, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < l; ++k)
            mpz_fdiv_r_ui(m.coeffs.at(k, i).get_mpz_t(), c.at(k, i).get_mpz_t(),
                          static_cast<unsigned long>(p));
    for (const Poly& f : a.forms()) m.forms.push_back(reduce_mod_p(f, p));
    return m;
}

bool TupleSet::full() const {
    std::size_t expect = 1;
    // C(universe, arity) without overflow risk at the sizes in play
    for (int i = 0; i < arity; ++i) expect = expect * (universe - i) / (i + 1);
    return tuples.size() == expect;
}

namespace {

TupleSet rank_tuples(const IntMatrix& m, int arity, long p, bool keep_full_rank) {
    TupleSet out;
    out.universe = m.cols();
    out.arity = arity;
    for (const auto& s : subsets_of_size(m.cols(), arity)) {
        int r = subset_rank(m, s, p);
        if ((r == arity) == keep_full_rank) out.tuples.push_back(s);
    }
    return out;
}

} // namespace

TupleSet vertex_tuples(const Arrangement& a) {
    if (!a.central()) throw NonCentralError();
    return rank_tuples(a.coefficients(), a.dimension(), 0, true);
}

TupleSet vertex_tuples_mod(const Arrangement& a, long p) {
    if (!a.central()) throw NonCentralError();
    if (!is_prime(p)) throw DomainError("prime modulus required");
    return rank_tuples(a.coefficients(), a.dimension(), p, true);
}

TupleSet vertex_tuples(const ModularArrangement& m) {
    return rank_tuples(m.coeffs, m.l, m.p, true);
}

TupleSet projective_tuples(const Arrangement& a) {
    return rank_tuples(a.coned_matrix(), a.dimension() + 1, 0, false);
}

TupleSet projective_tuples_mod(const Arrangement& a, long p) {
    if (!is_prime(p)) throw DomainError("prime modulus required");
    return rank_tuples(a.coned_matrix(), a.dimension() + 1, p, false);
}

int subset_rank(const IntMatrix& coeffs, const std::vector<int>& cols, long p) {
    IntMatrix sub = coeffs.selected_columns(cols);
    return p == 0 ? rank_rational(sub) : rank_mod_p(sub, p);
}

int subset_dim(const IntMatrix& coeffs, const std::vector<Int>& constants,
               const std::vector<int>& cols, int l, long p) {
    IntMatrix sub = coeffs.selected_columns(cols);
    int rank_h = p == 0 ? rank_rational(sub) : rank_mod_p(sub, p);
    if (!constants.empty()) {
        IntMatrix aug(coeffs.rows() + 1, static_cast<int>(cols.size()));
        for (int j = 0; j < aug.cols(); ++j) {
            for (int k = 0; k < coeffs.rows(); ++k) aug.at(k, j) = coeffs.at(k, cols[j]);
            aug.at(coeffs.rows(), j) = constants[cols[j]];
        }
        int rank_a = p == 0 ? rank_rational(aug) : rank_mod_p(aug, p);
        if (rank_a > rank_h) return -1;
    }
    return l - rank_h;
}

} // namespace arrmod
