#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

#include "arrmod/errors.hpp"

namespace arrmod {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// d = alpha*a + beta*b, d = gcd(a,b) >= 0.  Canonical cofactors:
// a | b -> (sgn a, 0); b | a strictly -> (0, sgn b); otherwise alpha has
// minimal absolute value, ties broken so that alpha*a >= 0.
struct Bezout {
    Int d, alpha, beta;
};
Bezout extended_gcd(const Int& a, const Int& b);

bool is_prime(long n);
std::vector<long> primes_upto(long bound);

// prime factors of |n|, n != 0; throws if a factor exceeds long range
std::set<long> prime_factors(const Int& n);

long to_long(const Int& v);

// deterministic across platforms (std::uniform_int_distribution is not)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next();
    // uniform in [lo, hi]
    long uniform(long lo, long hi);

private:
    std::uint64_t s_;
};

} // namespace arrmod
