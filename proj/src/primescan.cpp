#include "arrmod/primescan.hpp"

#include <algorithm>

namespace arrmod {

namespace {

// gcd of all 2x2 minors of the two selected augmented columns
Int pair_minor_gcd(const IntMatrix& cols, int i, int j) {
    Int g = 0;
    for (int r = 0; r < cols.rows(); ++r)
        for (int s = r + 1; s < cols.rows(); ++s)
            g = gcd(g, cols.at(r, i) * cols.at(s, j) - cols.at(s, i) * cols.at(r, j));
    return g;
}

} // namespace

std::set<long> nongood_primes(const Arrangement& a) {
    if (!a.central()) throw NonCentralError();
    std::set<long> out;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            Int g = pair_minor_gcd(a.coefficients(), i, j);
            // g != 0: distinct central hyperplanes are never proportional over Q
            if (abs(g) > 1)
                for (long p : prime_factors(g)) out.insert(p);
        }
    return out;
}

std::set<long> k_lucky_excluded(const Arrangement& a, int k, TermOrder order,
                                const GBOptions& opt) {
    if (!a.central()) throw NonCentralError();
    if (k < 1 || k > a.dimension()) throw DomainError("k must lie in 1..l");
    std::set<long> out;
    for (const auto& s : subsets_of_size(a.size(), k)) {
        if (subset_rank(a.coefficients(), s, 0) != k) continue;
        std::vector<Poly> gens;
        for (int i : s) gens.push_back(a.forms()[i]);
        try {
            for (long p : lucky_excluded_primes(gens, order, opt)) out.insert(p);
        } catch (const BudgetError&) {
            std::string tuple;
            for (int i : s) tuple += (tuple.empty() ? "" : ",") + std::to_string(i + 1);
            throw BudgetError("strong basis budget exceeded at tuple (" + tuple + ")");
        }
    }
    return out;
}

Int rho_period(const Arrangement& a) {
    if (!a.central()) throw NonCentralError();
    Int rho = 1;
    const int top = std::min(a.dimension(), a.size());
    for (int size = 1; size <= top; ++size)
        for (const auto& s : subsets_of_size(a.size(), size)) {
            SmithResult sm = snf(a.coefficients().selected_columns(s));
            if (!sm.d.empty()) rho = lcm(rho, sm.d.back());
        }
    return rho;
}

PrimeReport prime_report(const Arrangement& a, TermOrder order, const GBOptions& opt) {
    PrimeReport r;
    r.nongood = nongood_primes(a);
    // k = 1 carries no comparison content (single primitive forms), so the
    // report starts at 2 whenever the dimension allows it
    for (int k = a.dimension() >= 2 ? 2 : 1; k <= a.dimension(); ++k)
        r.nonlucky_by_k[k] = k_lucky_excluded(a, k, order, opt);
    r.rho0 = rho_period(a);
    if (r.rho0 > 1) r.rho0_primes = prime_factors(r.rho0);
    return r;
}

PeriodSupportCheck period_support_check(const Arrangement& a, TermOrder order,
                                        const GBOptions& opt) {
    if (!a.central()) throw NonCentralError();
    if (!is_essential(a)) throw NonEssentialError();
    PeriodSupportCheck c;
    c.left = nongood_primes(a);
    for (long p : k_lucky_excluded(a, a.dimension(), order, opt)) c.left.insert(p);
    Int rho = rho_period(a);
    if (rho > 1) c.right = prime_factors(rho);
    c.equal = c.left == c.right;
    return c;
}

std::set<long> jacobian_lucky_excluded(const Arrangement& a, TermOrder order, bool include_q,
                                       const GBOptions& opt) {
    if (!a.central()) throw NonCentralError();
    if (a.dimension() > 3 || a.size() > 6)
        throw BudgetError("jacobian basis limited to l <= 3, n <= 6");
    Poly q = Poly::constant(a.dimension(), 1, order);
    for (const Poly& f : a.forms()) q = q * f.with_order(order);
    std::vector<Poly> gens;
    for (int k = 0; k < a.dimension(); ++k) gens.push_back(partial_derivative(q, k));
    if (include_q) gens.push_back(q);
    return lucky_excluded_primes(gens, order, opt);
}

bool proportional_pairs_nonlucky(const Arrangement& a, long p, TermOrder order,
                                 const GBOptions& opt) {
    if (!is_prime(p)) throw DomainError("prime required");
    // constants participate in proportionality for affine forms
    IntMatrix aug(a.dimension() + 1, a.size());
    for (int i = 0; i < a.size(); ++i) {
        for (int k = 0; k < a.dimension(); ++k) aug.at(k, i) = a.coefficients().at(k, i);
        aug.at(a.dimension(), i) = a.constants()[i];
    }
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            Int g = pair_minor_gcd(aug, i, j);
            if (g == 0 || !mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(p)))
                continue; // pair does not collapse mod p
            std::set<long> excl =
                lucky_excluded_primes({a.forms()[i], a.forms()[j]}, order, opt);
            if (!excl.count(p)) return false;
        }
    return true;
}

} // namespace arrmod
