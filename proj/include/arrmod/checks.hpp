#pragma once

#include <functional>
#include <map>

#include "arrmod/arrangement.hpp"
#include "arrmod/polyring.hpp"

namespace arrmod::checks {

struct Fixture {
    std::string name;
    std::string polynomial; // linear-product source text
    int l;
};

const std::vector<Fixture>& fixtures();
Arrangement fixture(const std::string& name);

// seeded corpus of central essential arrangements with primitive, pairwise
// non-proportional columns; identical across platforms for a fixed seed
std::vector<Arrangement> random_central_essential(std::uint64_t seed, int count, int max_l = 3,
                                                  int max_n = 6, long entry_bound = 5);

IntMatrix random_matrix(Rng& rng, int rows, int cols, long bound);

// independent Mobius oracle: raw subset closures, no canonical keys
std::map<std::vector<int>, Int> brute_force_mobius(const Arrangement& a);

// product of the k-th invariant-factor gcds: d_1*...*d_k equals the gcd of all
// k x k minors; independent certificate for the Smith form
std::vector<Int> minor_gcd_invariants(const IntMatrix& m);

struct PropertyResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckConfig {
    std::uint64_t seed = 1;
    int random_count = 50;
    long prime_bound = 50;
    std::string only; // substring filter on property names
    TermOrder order = lex_order();
    int threads = 0;
};

std::vector<PropertyResult> run_checks(const CheckConfig& cfg);

} // namespace arrmod::checks
