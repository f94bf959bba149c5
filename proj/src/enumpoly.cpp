#include "arrmod/enumpoly.hpp"

#include <algorithm>
#include <thread>

#include "arrmod/primescan.hpp"

namespace arrmod {

Int BivariatePoly::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Int(0) : it->second;
}

void BivariatePoly::add(int i, int j, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = c_.try_emplace({i, j}, 0);
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

int BivariatePoly::degree_x() const {
    int d = 0;
    for (const auto& [k, v] : c_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::degree_y() const {
    int d = 0;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, v] : o.c_) r.add(k.first, k.second, v);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, v] : o.c_) r.add(k.first, k.second, -v);
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : o.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BivariatePoly BivariatePoly::constant(const Int& v) {
    BivariatePoly r;
    r.add(0, 0, v);
    return r;
}

BivariatePoly BivariatePoly::var_x() {
    BivariatePoly r;
    r.add(1, 0, 1);
    return r;
}

BivariatePoly BivariatePoly::var_y() {
    BivariatePoly r;
    r.add(0, 1, 1);
    return r;
}

BivariatePoly BivariatePoly::pow(int e) const {
    BivariatePoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::vector<Int> BivariatePoly::eval_x(const Int& v) const {
    std::vector<Int> out(static_cast<std::size_t>(degree_y()) + 1, 0);
    for (const auto& [k, c] : c_) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k.first));
        out[k.second] += c * p;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

namespace {

// counts of central subsets by (size, homogeneous rank); also yields rk(a)
struct SubsetProfile {
    std::map<std::pair<int, int>, Int> counts;
    int rank = 0;
};

SubsetProfile subset_profile(const Arrangement& a, int subset_cap) {
    if (a.size() > subset_cap) throw BudgetError("subset enumeration budget exceeded");
    SubsetProfile pr;
    for (int size = 0; size <= a.size(); ++size)
        for (const auto& s : subsets_of_size(a.size(), size)) {
            int dim = subset_dim(a.coefficients(), a.central() ? std::vector<Int>{} : a.constants(),
                                 s, a.dimension(), 0);
            if (dim < 0) continue; // not central: intersection empty
            int r = a.dimension() - dim;
            pr.counts[{size, r}] += 1;
            pr.rank = std::max(pr.rank, r);
        }
    return pr;
}

} // namespace

int arrangement_rank(const Arrangement& a) {
    if (a.central()) return rank_rational(a.coefficients());
    return subset_profile(a, a.size()).rank;
}

BivariatePoly tutte(const Arrangement& a, int subset_cap) {
    SubsetProfile pr = subset_profile(a, subset_cap);
    BivariatePoly acc;
    BivariatePoly xm1 = BivariatePoly::var_x() - BivariatePoly::constant(1);
    BivariatePoly ym1 = BivariatePoly::var_y() - BivariatePoly::constant(1);
    for (const auto& [key, cnt] : pr.counts) {
        auto [size, r] = key;
        acc = acc + BivariatePoly::constant(cnt) * xm1.pow(pr.rank - r) * ym1.pow(size - r);
    }
    return acc;
}

BivariatePoly coboundary(const Arrangement& a, int subset_cap) {
    SubsetProfile pr = subset_profile(a, subset_cap);
    BivariatePoly acc;
    BivariatePoly ym1 = BivariatePoly::var_y() - BivariatePoly::constant(1);
    for (const auto& [key, cnt] : pr.counts) {
        auto [size, r] = key;
        BivariatePoly xpow;
        xpow.add(pr.rank - r, 0, 1);
        acc = acc + BivariatePoly::constant(cnt) * xpow * ym1.pow(size);
    }
    return acc;
}

std::vector<Int> char_from_tutte(const Arrangement& a, int subset_cap) {
    const int l = a.dimension();
    int rk = arrangement_rank(a);
    BivariatePoly t = tutte(a, subset_cap);
    // chi(t) = (-1)^rk t^(l-rk) T(1-t, 0); only x-degrees survive at y=0
    std::vector<Int> acc(static_cast<std::size_t>(l) + 1, 0);
    for (const auto& [k, c] : t.terms()) {
        if (k.second != 0) continue;
        // c * (1-t)^i expanded
        for (int m = 0; m <= k.first; ++m) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k.first),
                         static_cast<unsigned long>(m));
            Int v = c * b;
            if (m % 2) v = -v;
            acc[l - rk + m] += (rk % 2 ? -v : v);
        }
    }
    return acc;
}

bool tutte_to_coboundary_identity(const BivariatePoly& t, const BivariatePoly& cb, int rk) {
    BivariatePoly rhs;
    BivariatePoly xym1 = BivariatePoly::var_x() + BivariatePoly::var_y() - BivariatePoly::constant(1);
    BivariatePoly ym1 = BivariatePoly::var_y() - BivariatePoly::constant(1);
    for (const auto& [k, c] : t.terms()) {
        if (k.first > rk) return false;
        BivariatePoly ypow;
        ypow.add(0, k.second, c);
        rhs = rhs + ypow * xym1.pow(k.first) * ym1.pow(rk - k.first);
    }
    return cb == rhs;
}

bool coboundary_to_tutte_identity(const BivariatePoly& t, const BivariatePoly& cb, int rk) {
    BivariatePoly ym1 = BivariatePoly::var_y() - BivariatePoly::constant(1);
    BivariatePoly lhs = ym1.pow(rk) * t;
    BivariatePoly rhs;
    BivariatePoly xm1 = BivariatePoly::var_x() - BivariatePoly::constant(1);
    for (const auto& [k, c] : cb.terms()) {
        BivariatePoly ypow;
        ypow.add(0, k.second, c);
        rhs = rhs + ypow * xm1.pow(k.first) * ym1.pow(k.first);
    }
    return lhs == rhs;
}

namespace {

struct CountKernel {
    int l, n;
    long q;
    std::vector<std::vector<std::uint64_t>> col; // col[d][i] = coefficient of x_d in form i, mod q
    std::vector<std::uint64_t> base;             // constant of form i, mod q

    void leaf(std::vector<std::uint64_t> vals, std::vector<std::uint64_t>& hist) const {
        const auto& step = col[l - 1];
        for (long x = 0; x < q; ++x) {
            int h = 0;
            for (int i = 0; i < n; ++i) h += vals[i] == 0;
            ++hist[h];
            for (int i = 0; i < n; ++i) {
                vals[i] += step[i];
                if (vals[i] >= static_cast<std::uint64_t>(q)) vals[i] -= q;
            }
        }
    }

    void walk(int d, std::vector<std::uint64_t> vals, std::vector<std::uint64_t>& hist) const {
        if (d == l - 1) {
            leaf(std::move(vals), hist);
            return;
        }
        const auto& step = col[d];
        for (long x = 0; x < q; ++x) {
            walk(d + 1, vals, hist);
            for (int i = 0; i < n; ++i) {
                vals[i] += step[i];
                if (vals[i] >= static_cast<std::uint64_t>(q)) vals[i] -= q;
            }
        }
    }

    // points with first coordinate in [lo, hi)
    std::vector<std::uint64_t> range(long lo, long hi) const {
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
        std::vector<std::uint64_t> vals = base;
        for (int i = 0; i < n; ++i) vals[i] = (vals[i] + static_cast<std::uint64_t>(lo % q) * col[0][i]) % q;
        for (long x = lo; x < hi; ++x) {
            if (l == 1) {
                int h = 0;
                for (int i = 0; i < n; ++i) h += vals[i] == 0;
                ++hist[h];
            } else {
                walk(1, vals, hist);
            }
            for (int i = 0; i < n; ++i) {
                vals[i] += col[0][i];
                if (vals[i] >= static_cast<std::uint64_t>(q)) vals[i] -= q;
            }
        }
        return hist;
    }
};

} // namespace

std::vector<Int> hit_histogram(const Arrangement& a, long q, int threads, long point_budget) {
    if (q < 1) throw DomainError("modulus must be positive");
    const int l = a.dimension(), n = a.size();
    Int total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(l));
    if (total > point_budget) throw BudgetError("point enumeration budget exceeded");

    CountKernel kern;
    kern.l = l;
    kern.n = n;
    kern.q = q;
    kern.col.assign(l, std::vector<std::uint64_t>(n));
    kern.base.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < l; ++d) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), a.coefficients().at(d, i).get_mpz_t(),
                          static_cast<unsigned long>(q));
            kern.col[d][i] = r.get_ui();
        }
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.constants()[i].get_mpz_t(), static_cast<unsigned long>(q));
        kern.base[i] = r.get_ui();
    }

    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<long>(workers, q));

    std::vector<std::vector<std::uint64_t>> partial(workers);
    if (workers == 1) {
        partial[0] = kern.range(0, q);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            long lo = q * w / workers, hi = q * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] { partial[w] = kern.range(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<Int> hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& part : partial)
        for (int h = 0; h <= n; ++h) hist[h] += part[h];
    return hist;
}

Int count_complement(const Arrangement& a, long q, int threads, long point_budget) {
    return hit_histogram(a, q, threads, point_budget)[0];
}

namespace {

// power-basis coefficients (lowest first) of the Newton interpolant
std::vector<Rat> newton_interpolate(const std::vector<std::pair<long, Int>>& pts) {
    const std::size_t m = pts.size();
    std::vector<Rat> dd(m); // divided differences, computed in place
    for (std::size_t i = 0; i < m; ++i) dd[i] = Rat(pts[i].second);
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t i = m - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(pts[i].first - pts[i - k].first);
            if (i == k) break;
        }
    std::vector<Rat> coeff{dd[m - 1]};
    for (std::size_t k = m - 1; k-- > 0;) {
        // coeff = coeff * (x - x_k) + dd[k]
        coeff.insert(coeff.begin(), Rat(0));
        for (std::size_t j = 0; j + 1 < coeff.size(); ++j) coeff[j] -= Rat(pts[k].first) * coeff[j + 1];
        coeff[0] += dd[k];
    }
    while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
    return coeff;
}

} // namespace

std::optional<std::vector<Rat>> polynomial_fit(const std::vector<std::pair<long, Int>>& samples,
                                               int degree) {
    if (static_cast<int>(samples.size()) < degree + 1)
        throw DomainError("not enough samples for the requested degree");
    std::vector<std::pair<long, Int>> head(samples.begin(), samples.begin() + degree + 1);
    std::vector<Rat> coeff = newton_interpolate(head);
    for (const auto& [x, y] : samples) {
        Rat acc(0), xp(1);
        for (const Rat& c : coeff) {
            acc += c * xp;
            xp *= Rat(x);
        }
        if (acc != Rat(y)) return std::nullopt;
    }
    return coeff;
}

BivariatePoly coboundary_from_counts(const Arrangement& a, const std::vector<long>& ps,
                                     TermOrder order, int threads, long point_budget) {
    if (!a.central()) throw NonCentralError();
    if (!is_essential(a)) throw NonEssentialError();
    const int l = a.dimension(), n = a.size();
    std::set<long> distinct(ps.begin(), ps.end());
    if (static_cast<int>(distinct.size()) < l + 1)
        throw DomainError("need at least l+1 distinct primes for interpolation");

    std::set<long> bad = nongood_primes(a);
    std::set<long> unlucky = k_lucky_excluded(a, l, order);
    for (long p : distinct) {
        if (!is_prime(p)) throw DomainError("interpolation node " + std::to_string(p) + " is not prime");
        if (bad.count(p))
            throw DomainError("prime " + std::to_string(p) + " is not good for the arrangement");
        if (unlucky.count(p))
            throw DomainError("prime " + std::to_string(p) + " has a leading-coefficient obstruction");
    }

    std::vector<std::vector<Int>> hists;
    std::vector<long> nodes(distinct.begin(), distinct.end());
    for (long p : nodes) hists.push_back(hit_histogram(a, p, threads, point_budget));

    BivariatePoly out;
    for (int h = 0; h <= n; ++h) {
        std::vector<std::pair<long, Int>> pts;
        for (std::size_t i = 0; i < nodes.size(); ++i) pts.emplace_back(nodes[i], hists[i][h]);
        std::vector<Rat> coeff = newton_interpolate(pts);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            if (coeff[i].get_den() != 1)
                throw InterpolationError("non-integer interpolation coefficient: precondition violated");
            out.add(static_cast<int>(i), h, Int(coeff[i].get_num()));
        }
    }
    return out;
}

} // namespace arrmod
