#pragma once

#include <set>

#include "arrmod/polyring.hpp"

namespace arrmod {

struct GBOptions {
    unsigned degree_cap = 40;   // abort if a new basis element exceeds this total degree
    std::size_t basis_cap = 5000;
    enum class PairStrategy { MinLcm, Fifo } strategy = PairStrategy::MinLcm;
    bool track_cofactors = false;
};

// minimal strong basis over Z: leading coefficients positive, no leading
// monomial strongly divides another, tails fully reduced, elements listed with
// decreasing leading terms.  cofactors[i] expresses generators[i] as a
// combination of the input polynomials (present iff requested).
struct StrongBasis {
    std::vector<Poly> generators;
    std::vector<std::pair<Int, Monomial>> leading_ledger; // (lc, lt) per generator
    std::vector<std::vector<Poly>> cofactors;
};

// (c/a)(u/s) f - (c/b)(u/t) g  with a,b the leading coefficients, s,t the
// leading terms, c = lcm(a,b), u = lcm(s,t)
Poly s_polynomial(const Poly& f, const Poly& g);

// alpha (u/s) f + beta (u/t) g  with gcd(a,b) = alpha a + beta b
Poly g_polynomial(const Poly& f, const Poly& g);

// full normal form: a term is rewritten by the first basis element whose
// leading monomial strongly divides it (leading term divides the term and
// leading coefficient divides the coefficient); irreducible terms are kept
Poly strong_reduce(const Poly& f, const std::vector<Poly>& basis, TermOrder order);

StrongBasis strong_groebner(const std::vector<Poly>& gens, TermOrder order,
                            const GBOptions& opt = {});

// primes dividing some leading coefficient of the minimal strong basis
std::set<long> lucky_excluded_primes(const std::vector<Poly>& gens, TermOrder order,
                                     const GBOptions& opt = {});

bool ideal_membership(const Poly& f, const std::vector<Poly>& gens, TermOrder order,
                      const GBOptions& opt = {});

struct BasisCheck {
    bool ok;
    std::string detail;
};

// post-hoc certificate: S- and G-polynomials of all pairs reduce to zero, the
// basis is minimal with reduced tails and positive leading coefficients, every
// input reduces to zero, and any recorded cofactor combination reproduces its
// generator exactly
BasisCheck verify_strong_basis(const StrongBasis& basis, const std::vector<Poly>& inputs,
                               TermOrder order);

} // namespace arrmod
