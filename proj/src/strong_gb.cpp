#include "arrmod/strong_gb.hpp"

#include <algorithm>
#include <deque>

namespace arrmod {

namespace {

void require_integral(const Poly& f) {
    if (f.modulus() != 0) throw DomainError("strong basis operations require integer coefficients");
}

void require_pair(const Poly& f, const Poly& g) {
    require_integral(f);
    require_integral(g);
    if (f.is_zero() || g.is_zero()) throw DomainError("s/g-polynomial of a zero polynomial");
    if (f.nvars() != g.nvars()) throw DomainError("polynomials over different variable counts");
}

// polynomial with an attached expression in terms of the original inputs
struct Ent {
    Poly value;
    std::vector<Poly> cof;

    void sub_mult(const Ent& g, const Int& q, const Monomial& m) {
        value -= g.value.times_term(q, m);
        for (std::size_t k = 0; k < cof.size(); ++k) cof[k] -= g.cof[k].times_term(q, m);
    }
    void negate() {
        value = -value;
        for (auto& c : cof) c = -c;
    }
};

struct Engine {
    TermOrder order;
    GBOptions opt;
    std::vector<Ent> basis;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;

    // full normal form against the current basis, cofactors carried along
    void reduce(Ent& h) const {
        Poly rem(h.value.nvars(), order, 0);
        while (!h.value.is_zero()) {
            auto [m, c] = h.value.leading_monomial();
            bool hit = false;
            for (const auto& g : basis) {
                const Monomial& lt = g.value.leading_term();
                const Int& lc = g.value.leading_coefficient();
                if (!mono_divides(lt, m)) continue;
                if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) continue;
                h.sub_mult(g, c / lc, mono_div(m, lt));
                hit = true;
                break;
            }
            if (!hit) {
                rem.add_term(m, c);
                Poly t(h.value.nvars(), order, 0);
                t.add_term(m, c);
                h.value -= t;
            }
        }
        h.value = rem;
    }

    // canonical form: like reduce, but rewrites with floor division, so every
    // surviving coefficient lies in [0, lc(g)) for each basis element g whose
    // leading term divides it.  With positive leading coefficients this is the
    // unique representative of the residue class, independent of scan order.
    void reduce_canonical(Ent& h) const {
        Poly rem(h.value.nvars(), order, 0);
        while (!h.value.is_zero()) {
            auto [m, c] = h.value.leading_monomial();
            bool hit = false;
            for (const auto& g : basis) {
                const Monomial& lt = g.value.leading_term();
                if (!mono_divides(lt, m)) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(),
                           g.value.leading_coefficient().get_mpz_t());
                if (q == 0) continue;
                h.sub_mult(g, q, mono_div(m, lt));
                hit = true;
                break;
            }
            if (!hit) {
                rem.add_term(m, c);
                Poly t(h.value.nvars(), order, 0);
                t.add_term(m, c);
                h.value -= t;
            }
        }
        h.value = rem;
    }

    Ent make_s(const Ent& f, const Ent& g) const {
        const Int &a = f.value.leading_coefficient(), &b = g.value.leading_coefficient();
        const Monomial &s = f.value.leading_term(), &t = g.value.leading_term();
        Int c = lcm(a, b);
        Monomial u = mono_lcm(s, t);
        Ent r{Poly(f.value.nvars(), order, 0), {}};
        if (!f.cof.empty()) r.cof.assign(f.cof.size(), Poly(f.value.nvars(), order, 0));
        r.sub_mult(f, -(c / a), mono_div(u, s));
        r.sub_mult(g, c / b, mono_div(u, t));
        return r;
    }

    Ent make_g(const Ent& f, const Ent& g) const {
        const Int &a = f.value.leading_coefficient(), &b = g.value.leading_coefficient();
        const Monomial &s = f.value.leading_term(), &t = g.value.leading_term();
        Bezout bz = extended_gcd(a, b);
        Monomial u = mono_lcm(s, t);
        Ent r{Poly(f.value.nvars(), order, 0), {}};
        if (!f.cof.empty()) r.cof.assign(f.cof.size(), Poly(f.value.nvars(), order, 0));
        r.sub_mult(f, -bz.alpha, mono_div(u, s));
        r.sub_mult(g, -bz.beta, mono_div(u, t));
        return r;
    }

    void push_element(Ent e) {
        if (e.value.degree() > opt.degree_cap)
            throw BudgetError("strong basis degree budget exceeded");
        if (basis.size() >= opt.basis_cap)
            throw BudgetError("strong basis size budget exceeded");
        if (sgn(e.value.leading_coefficient()) < 0) e.negate();
        std::size_t j = basis.size();
        basis.push_back(std::move(e));
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }

    std::pair<std::size_t, std::size_t> pop_pair() {
        if (opt.strategy == GBOptions::PairStrategy::Fifo) {
            auto p = pairs.front();
            pairs.pop_front();
            return p;
        }
        auto best = pairs.begin();
        Monomial best_lcm = mono_lcm(basis[best->first].value.leading_term(),
                                     basis[best->second].value.leading_term());
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = mono_lcm(basis[it->first].value.leading_term(),
                                  basis[it->second].value.leading_term());
            int cmp = order.compare(l, best_lcm);
            if (cmp < 0 || (cmp == 0 && *it < *best)) {
                best = it;
                best_lcm = l;
            }
        }
        auto p = *best;
        pairs.erase(best);
        return p;
    }

    void complete() {
        while (!pairs.empty()) {
            auto [i, j] = pop_pair();
            // copies: push_element may reallocate the basis vector
            Int a = basis[i].value.leading_coefficient(), b = basis[j].value.leading_coefficient();
            Monomial s = basis[i].value.leading_term(), t = basis[j].value.leading_term();

            // product criterion, sound over Z only when both heads are units
            bool coprime_heads = abs(a) == 1 && abs(b) == 1 &&
                                 total_degree(mono_lcm(s, t)) == total_degree(s) + total_degree(t);
            if (!coprime_heads) {
                Ent sp = make_s(basis[i], basis[j]);
                reduce(sp);
                if (!sp.value.is_zero()) push_element(std::move(sp));
            }
            Int d = gcd(a, b);
            if (d != abs(a) && d != abs(b)) { // otherwise the g-polynomial is a multiple of f or g
                Ent gp = make_g(basis[i], basis[j]);
                reduce(gp);
                if (!gp.value.is_zero()) push_element(std::move(gp));
            }
        }
    }
};

std::vector<std::size_t> minimal_subset(const std::vector<Ent>& basis, TermOrder order) {
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // divisor candidates first: ascending leading term, then |lc|, then age
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c1 = order.compare(basis[a].value.leading_term(), basis[b].value.leading_term());
        if (c1 != 0) return c1 < 0;
        Int la = abs(basis[a].value.leading_coefficient());
        Int lb = abs(basis[b].value.leading_coefficient());
        if (la != lb) return la < lb;
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        const Monomial& lt = basis[i].value.leading_term();
        const Int& lc = basis[i].value.leading_coefficient();
        bool dominated = false;
        for (std::size_t k : kept) {
            const Monomial& lt2 = basis[k].value.leading_term();
            const Int& lc2 = basis[k].value.leading_coefficient();
            if (mono_divides(lt2, lt) && mpz_divisible_p(lc.get_mpz_t(), lc2.get_mpz_t())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(i);
    }
    return kept;
}

} // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
    require_pair(f, g);
    Engine e{f.order(), GBOptions{}, {}, {}};
    Ent r = e.make_s(Ent{f, {}}, Ent{g.with_order(f.order()), {}});
    return r.value;
}

Poly g_polynomial(const Poly& f, const Poly& g) {
    require_pair(f, g);
    Engine e{f.order(), GBOptions{}, {}, {}};
    Ent r = e.make_g(Ent{f, {}}, Ent{g.with_order(f.order()), {}});
    return r.value;
}

Poly strong_reduce(const Poly& f, const std::vector<Poly>& basis, TermOrder order) {
    require_integral(f);
    Engine e{order, GBOptions{}, {}, {}};
    for (const Poly& g : basis) {
        require_integral(g);
        if (!g.is_zero()) e.basis.push_back(Ent{g.with_order(order), {}});
    }
    Ent h{f.with_order(order), {}};
    e.reduce(h);
    return h.value;
}

StrongBasis strong_groebner(const std::vector<Poly>& gens, TermOrder order, const GBOptions& opt) {
    Engine e{order, opt, {}, {}};
    const std::size_t n = gens.size();
    for (std::size_t k = 0; k < n; ++k) {
        require_integral(gens[k]);
        if (gens[k].is_zero()) continue;
        Ent ent{gens[k].with_order(order), {}};
        if (opt.track_cofactors) {
            ent.cof.assign(n, Poly(gens[k].nvars(), order, 0));
            ent.cof[k] = Poly::constant(gens[k].nvars(), 1, order);
        }
        if (sgn(ent.value.leading_coefficient()) < 0) ent.negate();
        e.push_element(std::move(ent));
    }
    StrongBasis out;
    if (e.basis.empty()) return out;
    e.complete();

    std::vector<std::size_t> kept = minimal_subset(e.basis, order);
    std::vector<Ent> minimal;
    for (std::size_t i : kept) minimal.push_back(std::move(e.basis[i]));

    // tail canonicalization: heads are untouchable (in a minimal basis, a head
    // whose monomial divides another head has the strictly larger coefficient,
    // so floor division leaves heads alone), and every lower term ends with its
    // coefficient in [0, lc(g)) for each g whose head divides it.  Exact
    // reduction alone would leave tails ambiguous by multiples of basis
    // elements, making the output depend on the pair-selection strategy.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        Engine sub{order, opt, {}, {}};
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) sub.basis.push_back(Ent{minimal[j].value, minimal[j].cof});
        sub.reduce_canonical(minimal[i]);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Ent& a, const Ent& b) {
        return order.compare(a.value.leading_term(), b.value.leading_term()) > 0;
    });
    for (auto& ent : minimal) {
        out.leading_ledger.emplace_back(ent.value.leading_coefficient(), ent.value.leading_term());
        out.generators.push_back(std::move(ent.value));
        if (opt.track_cofactors) out.cofactors.push_back(std::move(ent.cof));
    }
    return out;
}

std::set<long> lucky_excluded_primes(const std::vector<Poly>& gens, TermOrder order,
                                     const GBOptions& opt) {
    StrongBasis b = strong_groebner(gens, order, opt);
    std::set<long> out;
    for (const auto& [lc, lt] : b.leading_ledger) {
        if (abs(lc) == 1) continue;
        for (long p : prime_factors(lc)) out.insert(p);
    }
    return out;
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens, TermOrder order,
                      const GBOptions& opt) {
    StrongBasis b = strong_groebner(gens, order, opt);
    return strong_reduce(f, b.generators, order).is_zero();
}

BasisCheck verify_strong_basis(const StrongBasis& basis, const std::vector<Poly>& inputs,
                               TermOrder order) {
    const auto& g = basis.generators;
    if (g.empty()) {
        for (const Poly& f : inputs)
            if (!f.is_zero()) return {false, "empty basis for a nonzero ideal"};
        return {true, ""};
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) return {false, "zero basis element"};
        if (sgn(g[i].with_order(order).leading_coefficient()) <= 0)
            return {false, "leading coefficient not positive"};
    }
    std::vector<Poly> gg;
    for (const Poly& f : g) gg.push_back(f.with_order(order));

    for (std::size_t i = 0; i < gg.size(); ++i)
        for (std::size_t j = 0; j < gg.size(); ++j) {
            if (i == j) continue;
            if (mono_divides(gg[j].leading_term(), gg[i].leading_term()) &&
                mpz_divisible_p(gg[i].leading_coefficient().get_mpz_t(),
                                gg[j].leading_coefficient().get_mpz_t()))
                return {false, "basis not minimal: leading monomial " + std::to_string(j) +
                                   " strongly divides " + std::to_string(i)};
        }

    for (std::size_t i = 0; i < gg.size(); ++i) {
        bool head = true;
        for (const auto& [m, c] : gg[i].terms()) {
            if (head) { head = false; continue; }
            for (std::size_t j = 0; j < gg.size(); ++j)
                if (mono_divides(gg[j].leading_term(), m) &&
                    mpz_divisible_p(c.get_mpz_t(), gg[j].leading_coefficient().get_mpz_t()))
                    return {false, "tail of element " + std::to_string(i) + " is reducible"};
        }
    }

    for (std::size_t i = 0; i < gg.size(); ++i)
        for (std::size_t j = i + 1; j < gg.size(); ++j) {
            if (!strong_reduce(s_polynomial(gg[i], gg[j]), gg, order).is_zero())
                return {false, "s-polynomial of pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") does not reduce to zero"};
            Int d = gcd(gg[i].leading_coefficient(), gg[j].leading_coefficient());
            if (d != abs(gg[i].leading_coefficient()) && d != abs(gg[j].leading_coefficient()) &&
                !strong_reduce(g_polynomial(gg[i], gg[j]), gg, order).is_zero())
                return {false, "g-polynomial of pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") does not reduce to zero"};
        }

    for (std::size_t k = 0; k < inputs.size(); ++k)
        if (!strong_reduce(inputs[k], gg, order).is_zero())
            return {false, "input " + std::to_string(k) + " does not reduce to zero"};

    if (!basis.cofactors.empty()) {
        if (basis.cofactors.size() != g.size()) return {false, "cofactor row count mismatch"};
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (basis.cofactors[i].size() != inputs.size())
                return {false, "cofactor column count mismatch"};
            Poly acc(g[i].nvars(), order, 0);
            for (std::size_t k = 0; k < inputs.size(); ++k)
                acc += basis.cofactors[i][k].with_order(order) * inputs[k].with_order(order);
            if (acc != gg[i])
                return {false, "cofactor combination does not reproduce element " + std::to_string(i)};
        }
    }
    return {true, ""};
}

} // namespace arrmod
