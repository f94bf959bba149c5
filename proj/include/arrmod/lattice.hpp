#pragma once

#include "arrmod/arrangement.hpp"

namespace arrmod {

struct Flat {
    std::string key;              // canonical echelon form of the defining equations
    int rank = 0;                 // codimension
    std::vector<int> hyperplanes; // every i with H_i containing the flat; sorted
    Int mobius = 0;
};

// intersection poset under reverse inclusion; bottom = ambient space
struct LatticeModel {
    int l = 0;
    long p = 0; // 0 when built over Q
    std::vector<Flat> flats; // sorted by (rank, hyperplanes)
};

LatticeModel build_lattice(const Arrangement& a, int subset_cap = 20);
LatticeModel build_lattice(const ModularArrangement& m, int subset_cap = 20);

// sum of mobius(X) * t^dim(X); coefficients lowest degree first, length l+1
std::vector<Int> characteristic_polynomial(const LatticeModel& lat);

struct EquivalenceResult {
    bool equivalent = true;
    std::vector<int> witness; // lex-least subset whose intersection dims differ
};

// dimension of every nonempty subset intersection must agree (empty = -1)
EquivalenceResult comb_equivalent(const Arrangement& a, const Arrangement& b,
                                  int subset_cap = 20);
EquivalenceResult comb_equivalent(const Arrangement& a, const ModularArrangement& b,
                                  int subset_cap = 20);
// same sweep against the raw entrywise mod-p reduction (no goodness gate)
EquivalenceResult comb_equivalent_mod(const Arrangement& a, long p, int subset_cap = 20);

// whether [equal projective tuple sets] <=> [combinatorially equivalent] holds
bool projective_equivalence_crosscheck(const Arrangement& a, const Arrangement& b);
bool projective_equivalence_crosscheck(const Arrangement& a, const ModularArrangement& b);

} // namespace arrmod
