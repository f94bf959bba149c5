#pragma once

#include <string>
#include <vector>

#include "arrmod/arith.hpp"

namespace arrmod {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries); // row-major
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transposed() const;
    IntMatrix selected_columns(const std::vector<int>& idx) const;
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// column-style Hermite form: m * u = h with u unimodular; h lower-triangular
// echelon, pivots positive, zeros to the right of each pivot, entries to the
// left of a pivot reduced into [0, pivot)
struct HnfResult {
    IntMatrix h, u;
};
HnfResult hnf(const IntMatrix& m);

// s * m * t = diag(d) with s, t unimodular, d_1 | d_2 | ... | d_r, d_i > 0
struct SmithResult {
    std::vector<Int> d;
    IntMatrix s, t;
};
SmithResult snf(const IntMatrix& m);

int rank_rational(const IntMatrix& m);
int rank_mod_p(const IntMatrix& m, long p);
Int det(const IntMatrix& m); // throws NonSquareError

} // namespace arrmod
