#pragma once

#include <map>
#include <optional>

#include "arrmod/arrangement.hpp"

namespace arrmod {

class BivariatePoly {
public:
    using Key = std::pair<int, int>; // (degree in x, degree in y)

    const std::map<Key, Int>& terms() const { return c_; }
    Int coeff(int i, int j) const;
    void add(int i, int j, const Int& v);
    bool is_zero() const { return c_.empty(); }
    int degree_x() const;
    int degree_y() const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return c_ == o.c_; }

    static BivariatePoly constant(const Int& v);
    static BivariatePoly var_x();
    static BivariatePoly var_y();
    BivariatePoly pow(int e) const;

    // substitute a value for x: coefficients of the resulting y-polynomial,
    // lowest degree first
    std::vector<Int> eval_x(const Int& v) const;

private:
    std::map<Key, Int> c_;
};

using CountTable = std::map<long, Int>;

// rank of the arrangement's matroid: largest rank of a central subset
int arrangement_rank(const Arrangement& a);

BivariatePoly tutte(const Arrangement& a, int subset_cap = 20);
BivariatePoly coboundary(const Arrangement& a, int subset_cap = 20);

// characteristic polynomial through the subset-expansion route; must agree
// with the lattice route
std::vector<Int> char_from_tutte(const Arrangement& a, int subset_cap = 20);

// identity checks after clearing (y-1) powers:
//   coboundary == sum_ij T_ij (x+y-1)^i (y-1)^(rk-i) y^j
bool tutte_to_coboundary_identity(const BivariatePoly& t, const BivariatePoly& cb, int rk);
//   (y-1)^rk * T == sum_ij cb_ij (x-1)^i (y-1)^i y^j
bool coboundary_to_tutte_identity(const BivariatePoly& t, const BivariatePoly& cb, int rk);

// histogram over all points P of (Z/qZ)^l of the number of hyperplanes
// through P; entry h counts points lying on exactly h hyperplanes
std::vector<Int> hit_histogram(const Arrangement& a, long q, int threads = 0,
                               long point_budget = 100000000L);

// points of (Z/qZ)^l avoiding every hyperplane
Int count_complement(const Arrangement& a, long q, int threads = 0,
                     long point_budget = 100000000L);

// reconstructs the coboundary polynomial from per-prime point histograms via
// exact interpolation in the first argument; every prime must be good and
// have no leading-coefficient obstruction in the codimension-l ideals
BivariatePoly coboundary_from_counts(const Arrangement& a, const std::vector<long>& ps,
                                     TermOrder order = lex_order(), int threads = 0,
                                     long point_budget = 100000000L);

// least-squares-free exact fit: the unique degree-<=degree polynomial through
// the first degree+1 samples, verified against the rest; nullopt on residual
std::optional<std::vector<Rat>> polynomial_fit(const std::vector<std::pair<long, Int>>& samples,
                                               int degree);

} // namespace arrmod
