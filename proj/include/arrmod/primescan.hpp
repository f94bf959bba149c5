#pragma once

#include <map>

#include "arrmod/arrangement.hpp"
#include "arrmod/strong_gb.hpp"

namespace arrmod {

// primes p for which some pair of hyperplanes becomes proportional mod p:
// union over pairs of the prime factors of the gcd of all 2x2 column minors
std::set<long> nongood_primes(const Arrangement& a);

// primes dividing a leading coefficient of the minimal strong basis of some
// rank-k tuple ideal <alpha_i1,...,alpha_ik>
std::set<long> k_lucky_excluded(const Arrangement& a, int k, TermOrder order,
                                const GBOptions& opt = {});

// lcm of the largest invariant factor of C_J over every nonempty J, |J| <= l
Int rho_period(const Arrangement& a);

struct PrimeReport {
    std::set<long> nongood;
    std::map<int, std::set<long>> nonlucky_by_k; // k = 2..l, or just {1} when l = 1
    Int rho0;
    std::set<long> rho0_primes;

    bool equivalent_prime(long p) const { return gcd(rho0, Int(p)) == 1; }
};

PrimeReport prime_report(const Arrangement& a, TermOrder order, const GBOptions& opt = {});

// both sides of the period-support equality, computed independently:
// left = nongood union k_lucky_excluded(l), right = prime support of rho0
struct PeriodSupportCheck {
    bool equal = false;
    std::set<long> left, right;
};
PeriodSupportCheck period_support_check(const Arrangement& a, TermOrder order,
                                        const GBOptions& opt = {});

// leading-coefficient primes of the strong basis of the ideal generated by
// the partial derivatives of Q (optionally including Q itself)
std::set<long> jacobian_lucky_excluded(const Arrangement& a, TermOrder order,
                                       bool include_q = false, const GBOptions& opt = {});

// every pair of forms proportional mod p must have p among the excluded
// primes of its pair ideal; vacuously true without such pairs.  The converse
// is deliberately not asserted.
bool proportional_pairs_nonlucky(const Arrangement& a, long p, TermOrder order,
                                 const GBOptions& opt = {});

} // namespace arrmod
