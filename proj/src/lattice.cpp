#include "arrmod/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace arrmod {

namespace {

struct View {
    const IntMatrix* coeffs;
    const std::vector<Int>* constants; // nullptr when central
    long p;
    int l;
};

View view_of(const Arrangement& a) {
    return {&a.coefficients(), a.central() ? nullptr : &a.constants(), 0, a.dimension()};
}

View view_of(const ModularArrangement& m) { return {&m.coeffs, nullptr, m.p, m.l}; }

int view_dim(const View& v, const std::vector<int>& cols) {
    static const std::vector<Int> none;
    return subset_dim(*v.coeffs, v.constants ? *v.constants : none, cols, v.l, v.p);
}

// rows of the defining system: coefficient column transposed, constant appended
std::vector<std::vector<Int>> augmented_rows(const View& v, const std::vector<int>& cols) {
    const int w = v.l + (v.constants ? 1 : 0);
    std::vector<std::vector<Int>> rows;
    for (int c : cols) {
        std::vector<Int> r(w);
        for (int k = 0; k < v.l; ++k) r[k] = v.coeffs->at(k, c);
        if (v.constants) r[v.l] = (*v.constants)[c];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string echelon_key_q(std::vector<std::vector<Int>> irows) {
    const int rr = static_cast<int>(irows.size());
    const int cc = rr ? static_cast<int>(irows[0].size()) : 0;
    std::vector<std::vector<Rat>> m(rr, std::vector<Rat>(cc));
    for (int i = 0; i < rr; ++i)
        for (int j = 0; j < cc; ++j) m[i][j] = irows[i][j];
    int r = 0;
    for (int c = 0; c < cc && r < rr; ++c) {
        int piv = -1;
        for (int i = r; i < rr; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat f = m[r][c];
        for (int j = c; j < cc; ++j) m[r][j] /= f;
        for (int i = 0; i < rr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat g = m[i][c];
            for (int j = c; j < cc; ++j) m[i][j] -= g * m[r][j];
        }
        ++r;
    }
    std::ostringstream key;
    for (int i = 0; i < r; ++i) {
        Int l(1);
        for (int j = 0; j < cc; ++j) l = lcm(l, Int(m[i][j].get_den()));
        Int g(0);
        std::vector<Int> row(cc);
        for (int j = 0; j < cc; ++j) {
            row[j] = Rat(m[i][j] * Rat(l)).get_num(); // denominator is 1 after scaling
            g = gcd(g, row[j]);
        }
        for (int j = 0; j < cc; ++j) key << Int(row[j] / g).get_str() << (j + 1 < cc ? "," : ";");
    }
    return key.str();
}

std::string echelon_key_p(const std::vector<std::vector<Int>>& irows, long p) {
    const int rr = static_cast<int>(irows.size());
    const int cc = rr ? static_cast<int>(irows[0].size()) : 0;
    std::vector<std::vector<long>> m(rr, std::vector<long>(cc));
    for (int i = 0; i < rr; ++i)
        for (int j = 0; j < cc; ++j) {
            Int v;
            mpz_fdiv_r_ui(v.get_mpz_t(), irows[i][j].get_mpz_t(), static_cast<unsigned long>(p));
            m[i][j] = v.get_si();
        }
    auto inv = [&](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<long>((__int128)r * b % p);
            b = static_cast<long>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    int r = 0;
    for (int c = 0; c < cc && r < rr; ++c) {
        int piv = -1;
        for (int i = r; i < rr; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        long f = inv(m[r][c]);
        for (int j = c; j < cc; ++j) m[r][j] = static_cast<long>((__int128)m[r][j] * f % p);
        for (int i = 0; i < rr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long g = m[i][c];
            for (int j = c; j < cc; ++j)
                m[i][j] = static_cast<long>(((__int128)m[i][j] - (__int128)g * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    std::ostringstream key;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cc; ++j) key << m[i][j] << (j + 1 < cc ? "," : ";");
    return key.str();
}

std::string flat_key(const View& v, const std::vector<int>& cols) {
    auto rows = augmented_rows(v, cols);
    return v.p == 0 ? echelon_key_q(std::move(rows)) : echelon_key_p(rows, v.p);
}

LatticeModel build_from_view(const View& v, int n, int subset_cap) {
    if (n > subset_cap) throw BudgetError("subset enumeration budget exceeded");
    LatticeModel lat;
    lat.l = v.l;
    lat.p = v.p;
    std::unordered_map<std::string, std::size_t> index;

    for (int size = 0; size <= n; ++size)
        for (const auto& s : subsets_of_size(n, size)) {
            if (view_dim(v, s) < 0) continue; // empty intersection: not a flat
            std::string key = flat_key(v, s);
            auto [it, fresh] = index.try_emplace(key, lat.flats.size());
            if (fresh) {
                Flat f;
                f.key = key;
                f.rank = v.l - view_dim(v, s);
                f.hyperplanes = s;
                lat.flats.push_back(std::move(f));
            } else {
                // the union over all subsets with this key is the closure
                Flat& f = lat.flats[it->second];
                std::vector<int> merged;
                std::set_union(f.hyperplanes.begin(), f.hyperplanes.end(), s.begin(), s.end(),
                               std::back_inserter(merged));
                f.hyperplanes = std::move(merged);
            }
        }

    std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.hyperplanes < b.hyperplanes;
    });
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
        Flat& x = lat.flats[i];
        if (x.rank == 0) {
            x.mobius = 1;
            continue;
        }
        Int acc = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const Flat& y = lat.flats[j];
            if (y.rank >= x.rank) continue;
            if (std::includes(x.hyperplanes.begin(), x.hyperplanes.end(), y.hyperplanes.begin(),
                              y.hyperplanes.end()))
                acc += y.mobius;
        }
        x.mobius = -acc;
    }
    return lat;
}

} // namespace

LatticeModel build_lattice(const Arrangement& a, int subset_cap) {
    return build_from_view(view_of(a), a.size(), subset_cap);
}

LatticeModel build_lattice(const ModularArrangement& m, int subset_cap) {
    return build_from_view(view_of(m), m.n, subset_cap);
}

std::vector<Int> characteristic_polynomial(const LatticeModel& lat) {
    std::vector<Int> chi(static_cast<std::size_t>(lat.l) + 1, 0);
    for (const Flat& f : lat.flats) chi[lat.l - f.rank] += f.mobius;
    return chi;
}

namespace {

bool equiv_dfs(const View& va, const View& vb, int n, std::vector<int>& cur, int next,
               std::vector<int>& witness) {
    for (int i = next; i < n; ++i) {
        cur.push_back(i);
        if (view_dim(va, cur) != view_dim(vb, cur)) {
            witness = cur;
            return false;
        }
        if (!equiv_dfs(va, vb, n, cur, i + 1, witness)) return false;
        cur.pop_back();
    }
    return true;
}

EquivalenceResult equiv_views(const View& va, const View& vb, int n, int subset_cap) {
    if (n > subset_cap) throw BudgetError("subset enumeration budget exceeded");
    EquivalenceResult r;
    std::vector<int> cur;
    r.equivalent = equiv_dfs(va, vb, n, cur, 0, r.witness);
    return r;
}

void require_same_shape(int la, int na, int lb, int nb) {
    if (la != lb || na != nb) throw DomainError("arrangements differ in dimension or size");
}

} // namespace

EquivalenceResult comb_equivalent(const Arrangement& a, const Arrangement& b, int subset_cap) {
    require_same_shape(a.dimension(), a.size(), b.dimension(), b.size());
    return equiv_views(view_of(a), view_of(b), a.size(), subset_cap);
}

EquivalenceResult comb_equivalent(const Arrangement& a, const ModularArrangement& b,
                                  int subset_cap) {
    require_same_shape(a.dimension(), a.size(), b.l, b.n);
    return equiv_views(view_of(a), view_of(b), a.size(), subset_cap);
}

EquivalenceResult comb_equivalent_mod(const Arrangement& a, long p, int subset_cap) {
    if (!is_prime(p)) throw DomainError("prime modulus required");
    View vb = view_of(a);
    vb.p = p;
    return equiv_views(view_of(a), vb, a.size(), subset_cap);
}

namespace {

TupleSet projective_tuples_modular(const ModularArrangement& m) {
    IntMatrix coned(m.l + 1, m.n + 1);
    for (int i = 0; i < m.n; ++i)
        for (int k = 0; k < m.l; ++k) coned.at(k, i) = m.coeffs.at(k, i);
    coned.at(m.l, m.n) = 1;
    TupleSet out;
    out.universe = m.n + 1;
    out.arity = m.l + 1;
    for (const auto& s : subsets_of_size(out.universe, out.arity))
        if (subset_rank(coned, s, m.p) < out.arity) out.tuples.push_back(s);
    return out;
}

} // namespace

bool projective_equivalence_crosscheck(const Arrangement& a, const Arrangement& b) {
    if (!is_essential(a) || !is_essential(b)) throw NonEssentialError();
    bool tuples_equal = projective_tuples(a) == projective_tuples(b);
    return tuples_equal == comb_equivalent(a, b).equivalent;
}

bool projective_equivalence_crosscheck(const Arrangement& a, const ModularArrangement& b) {
    if (!is_essential(a)) throw NonEssentialError();
    if (rank_mod_p(b.coeffs, b.p) != b.l) throw NonEssentialError();
    bool tuples_equal = projective_tuples(a) == projective_tuples_modular(b);
    return tuples_equal == comb_equivalent(a, b).equivalent;
}

} // namespace arrmod
