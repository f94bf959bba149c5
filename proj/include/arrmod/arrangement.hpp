#pragma once

#include "arrmod/intmat.hpp"
#include "arrmod/polyring.hpp"

namespace arrmod {

// all strictly increasing k-subsets of {0..n-1}, lexicographic
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// ordered list of distinct hyperplanes ker(alpha_i + const_i) in Q^l; forms are
// stored primitive with positive leading coefficient, coefficients() holds the
// l x n matrix whose column i is the homogeneous part of form i
class Arrangement {
public:
    static Arrangement build(const std::vector<Poly>& forms, int l,
                             std::vector<std::string> vars = {});
    static Arrangement from_columns(const IntMatrix& coeffs,
                                    const std::vector<Int>& constants = {},
                                    std::vector<std::string> vars = {});

    int dimension() const { return l_; }
    int size() const { return n_; }
    bool central() const { return central_; }
    const std::vector<Poly>& forms() const { return forms_; }
    const IntMatrix& coefficients() const { return coeffs_; }
    const std::vector<Int>& constants() const { return consts_; }
    const std::vector<std::string>& var_names() const { return vars_; }

    // homogeneous coefficient matrix of the coned arrangement: (l+1) x (n+1),
    // constants moved to the last row, final column the new coordinate
    IntMatrix coned_matrix() const;

private:
    Arrangement() = default;
    int l_ = 0, n_ = 0;
    bool central_ = true;
    std::vector<Poly> forms_;
    IntMatrix coeffs_;
    std::vector<Int> consts_;
    std::vector<std::string> vars_;
};

Arrangement cone(const Arrangement& a);
bool is_essential(const Arrangement& a);

struct ModularArrangement {
    long p = 0;
    int l = 0, n = 0;
    IntMatrix coeffs;            // entries in [0, p)
    std::vector<Poly> forms;     // modulus p
};

// mod-p view when p is good (no two forms become proportional mod p, no form
// vanishes); otherwise throws NotGoodError with the first offending pair
ModularArrangement reduce_mod(const Arrangement& a, long p);

struct TupleSet {
    int universe = 0; // indices range over {0..universe-1}
    int arity = 0;
    std::vector<std::vector<int>> tuples; // 0-based, lexicographic
    bool operator==(const TupleSet&) const = default;
    bool full() const;
};

// l-subsets of hyperplanes meeting in a single point (independent columns)
TupleSet vertex_tuples(const Arrangement& a);                 // over Q; requires central
TupleSet vertex_tuples_mod(const Arrangement& a, long p);     // raw mod-p reduction
TupleSet vertex_tuples(const ModularArrangement& m);

// (l+1)-subsets of the coned hyperplanes whose projective closures meet;
// a tuple is out exactly when its coned columns reach rank l+1
TupleSet projective_tuples(const Arrangement& a);
TupleSet projective_tuples_mod(const Arrangement& a, long p);

// rank of the selected coefficient columns; p = 0 means over Q
int subset_rank(const IntMatrix& coeffs, const std::vector<int>& cols, long p);

// dimension of the intersection of the selected hyperplanes (-1 when empty);
// constants may be empty for a central arrangement
int subset_dim(const IntMatrix& coeffs, const std::vector<Int>& constants,
               const std::vector<int>& cols, int l, long p);

} // namespace arrmod
