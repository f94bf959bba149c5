#include "arrmod/arith.hpp"

namespace arrmod {

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Bezout extended_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    if (b == 0) return {abs(a), sgn(a), 0};
    if (a == 0) return {abs(b), 0, sgn(b)};
    Int d = gcd(a, b);
    if (d == abs(a)) return {d, sgn(a), 0};
    if (d == abs(b)) return {d, 0, sgn(b)};

    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // alpha is unique mod m = |b|/d; pick the representative of minimal absolute value
    Int m = abs(b) / d;
    Int alpha;
    mpz_fdiv_r(alpha.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t()); // in [0, m)
    if (2 * alpha > m) {
        alpha -= m;
    } else if (2 * alpha == m && sgn(a) < 0) {
        alpha -= m; // tie |m/2| = |m/2 - m|: keep alpha*a >= 0
    }
    Int beta = (d - alpha * a) / b;
    return {d, alpha, beta};
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_upto(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j >= 0 && j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

std::set<long> prime_factors(const Int& n) {
    if (n == 0) throw DomainError("prime_factors: zero has no factorization");
    Int m = abs(n);
    std::set<long> out;
    auto strip = [&](long p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.insert(p);
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
            } while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)));
        }
    };
    strip(2);
    for (Int d = 3; d * d <= m; d += 2) {
        if (!d.fits_slong_p()) throw DomainError("prime_factors: factor exceeds long range");
        strip(d.get_si());
    }
    if (m > 1) {
        if (!m.fits_slong_p()) throw DomainError("prime_factors: factor exceeds long range");
        out.insert(m.get_si());
    }
    return out;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw DomainError("integer exceeds long range");
    return v.get_si();
}

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    std::uint64_t r = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = r * (UINT64_MAX / r); // rejection threshold, no modulo bias
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % r);
}

} // namespace arrmod
