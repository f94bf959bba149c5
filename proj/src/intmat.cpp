#include "arrmod/intmat.hpp"

#include <sstream>

namespace arrmod {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows) * cols)
        throw DomainError("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::selected_columns(const std::vector<int>& idx) const {
    IntMatrix r(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols(); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw DomainError("column index out of range");
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    const int rows = m.rows(), cols = m.cols();

    auto negate_col = [&](int j) {
        for (int i = 0; i < rows; ++i) h.at(i, j) = -h.at(i, j);
        for (int i = 0; i < cols; ++i) u.at(i, j) = -u.at(i, j);
    };
    auto addmul_col = [&](int dst, int src, const Int& q) { // col dst -= q * col src
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) h.at(i, dst) -= q * h.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, dst) -= q * u.at(i, src);
    };

    int pc = 0; // next pivot column
    for (int r = 0; r < rows && pc < cols; ++r) {
        for (;;) {
            int best = -1;
            for (int j = pc; j < cols; ++j) {
                if (h.at(r, j) == 0) continue;
                if (best < 0 || abs(h.at(r, j)) < abs(h.at(r, best))) best = j;
            }
            if (best < 0) break; // row has no pivot
            h.swap_cols(pc, best);
            u.swap_cols(pc, best);
            if (h.at(r, pc) < 0) negate_col(pc);
            bool clear = true;
            for (int j = pc + 1; j < cols; ++j) {
                if (h.at(r, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, pc).get_mpz_t());
                addmul_col(j, pc, q);
                if (h.at(r, j) != 0) clear = false;
            }
            if (clear) {
                if (h.at(r, pc) != 0) {
                    for (int j = 0; j < pc; ++j) { // reduce entries left of the pivot
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, pc).get_mpz_t());
                        addmul_col(j, pc, q);
                    }
                    ++pc;
                }
                break;
            }
        }
    }
    return {h, u};
}

SmithResult snf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix s = IntMatrix::identity(m.rows());
    IntMatrix t = IntMatrix::identity(m.cols());
    const int rows = m.rows(), cols = m.cols();

    auto row_addmul = [&](int dst, int src, const Int& q) { // row dst -= q * row src
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) a.at(dst, j) -= q * a.at(src, j);
        for (int j = 0; j < rows; ++j) s.at(dst, j) -= q * s.at(src, j);
    };
    auto col_addmul = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) a.at(i, dst) -= q * a.at(i, src);
        for (int i = 0; i < cols; ++i) t.at(i, dst) -= q * t.at(i, src);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < cols; ++j) a.at(i, j) = -a.at(i, j);
        for (int j = 0; j < rows; ++j) s.at(i, j) = -s.at(i, j);
    };

    const int lim = std::min(rows, cols);
    int k = 0;
    for (; k < lim; ++k) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))))
                    pi = i, pj = j;
        if (pi < 0) break;

        for (;;) {
            a.swap_rows(k, pi);
            s.swap_rows(k, pi);
            a.swap_cols(k, pj);
            t.swap_cols(k, pj);
            if (a.at(k, k) < 0) negate_row(k);

            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
                row_addmul(i, k, q);
                if (a.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
                col_addmul(j, k, q);
                if (a.at(k, j) != 0) clean = false;
            }
            if (clean) {
                // pivot must divide the rest of the submatrix for the divisor chain
                int bi = -1, bj = -1;
                for (int i = k + 1; i < rows && bi < 0; ++i)
                    for (int j = k + 1; j < cols; ++j)
                        if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(k, k).get_mpz_t())) {
                            bi = i, bj = j;
                            break;
                        }
                if (bi < 0) break;
                row_addmul(k, bi, Int(-1)); // fold the offending row in and redo
            }
            // re-pick the smallest entry after the disturbance
            pi = -1, pj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j)
                    if (a.at(i, j) != 0 &&
                        (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))))
                        pi = i, pj = j;
        }
    }

    std::vector<Int> d;
    for (int i = 0; i < k; ++i) d.push_back(a.at(i, i));
    return {d, s, t};
}

// fraction-free Gaussian elimination; entries stay exact minors
static int bareiss_rank(IntMatrix a, Int* det_out) {
    const int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int rank = 0, swaps = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            if (det_out) { *det_out = 0; return rank; }
            continue;
        }
        if (piv != rank) {
            a.swap_rows(piv, rank);
            ++swaps;
        }
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int v = a.at(i, j) * a.at(rank, c) - a.at(i, c) * a.at(rank, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, c) = 0;
        }
        prev = a.at(rank, c);
        ++rank;
    }
    if (det_out) *det_out = (swaps % 2 ? -prev : prev);
    return rank;
}

int rank_rational(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_rank(m, nullptr);
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError();
    if (m.rows() == 0) return 1;
    Int d;
    bareiss_rank(m, &d);
    return d;
}

int rank_mod_p(const IntMatrix& m, long p) {
    if (!is_prime(p)) throw DomainError("rank_mod_p: modulus must be prime");
    const int rows = m.rows(), cols = m.cols();
    std::vector<long> a(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), m.at(i, j).get_mpz_t(), static_cast<unsigned long>(p));
            a[static_cast<std::size_t>(i) * cols + j] = r.get_si();
        }
    auto at = [&](int i, int j) -> long& { return a[static_cast<std::size_t>(i) * cols + j]; };
    auto inv = [&](long x) { // p is prime, x != 0 mod p
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<long>((__int128)r * b % p);
            b = static_cast<long>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (at(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
        long iv = inv(at(rank, c));
        for (int i = rank + 1; i < rows; ++i) {
            long f = static_cast<long>((__int128)at(i, c) * iv % p);
            if (!f) continue;
            for (int j = c; j < cols; ++j)
                at(i, j) = static_cast<long>(((__int128)at(i, j) - (__int128)f * at(rank, j)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace arrmod
