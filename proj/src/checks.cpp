#include "arrmod/checks.hpp"

#include <algorithm>
#include <sstream>

#include "arrmod/enumpoly.hpp"
#include "arrmod/lattice.hpp"
#include "arrmod/primescan.hpp"
#include "arrmod/strong_gb.hpp"

namespace arrmod::checks {

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = {
        {"coords3", "x*y*z", 3},
        {"braid3", "(x-y)*(x-z)*(y-z)", 3},
        {"mix5", "x*y*z*(x+y)*(x+2*y+z)", 3},
        {"mix4", "x*y*(x+y)*(x+3*y+z)", 3},
        {"skew5", "z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)", 3},
        {"single1", "x", 1},
        {"affine3", "x*(x-1)*y", 2},
    };
    return fx;
}

Arrangement fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name)
            return Arrangement::build(parse_product(f.polynomial, default_var_names(f.l)), f.l);
    throw DomainError("unknown fixture: " + name);
}

IntMatrix random_matrix(Rng& rng, int rows, int cols, long bound) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-bound, bound);
    return m;
}

std::vector<Arrangement> random_central_essential(std::uint64_t seed, int count, int max_l,
                                                  int max_n, long entry_bound) {
    Rng rng(seed);
    std::vector<Arrangement> out;
    while (static_cast<int>(out.size()) < count) {
        int l = static_cast<int>(rng.uniform(1, max_l));
        int n = l == 1 ? 1 : static_cast<int>(rng.uniform(l, max_n));
        std::vector<std::vector<Int>> cols;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            int attempts = 0;
            for (;;) {
                if (++attempts > 200) {
                    ok = false;
                    break;
                }
                std::vector<Int> c(l);
                bool nonzero = false;
                for (int k = 0; k < l; ++k) {
                    c[k] = rng.uniform(-entry_bound, entry_bound);
                    nonzero = nonzero || c[k] != 0;
                }
                if (!nonzero) continue;
                Int g = 0;
                for (const Int& v : c) g = gcd(g, v);
                int lead = 0;
                while (c[lead] == 0) ++lead;
                if (c[lead] < 0) g = -g;
                for (Int& v : c) v /= g;
                if (std::find(cols.begin(), cols.end(), c) != cols.end()) continue;
                cols.push_back(std::move(c));
                break;
            }
        }
        if (!ok) continue;
        IntMatrix m(l, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < l; ++k) m.at(k, j) = cols[j][k];
        if (rank_rational(m) != l) continue;
        out.push_back(Arrangement::from_columns(m));
    }
    return out;
}

std::map<std::vector<int>, Int> brute_force_mobius(const Arrangement& a) {
    const int n = a.size(), l = a.dimension();
    static const std::vector<Int> none;
    const std::vector<Int>& consts = a.central() ? none : a.constants();
    auto dim_of = [&](const std::vector<int>& s) {
        return subset_dim(a.coefficients(), consts, s, l, 0);
    };
    std::map<std::vector<int>, int> closures; // closure -> rank
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        int d = dim_of(s);
        if (d < 0) continue;
        std::vector<int> cl;
        for (int h = 0; h < n; ++h) {
            std::vector<int> ext = s;
            if (std::find(s.begin(), s.end(), h) == s.end()) ext.push_back(h);
            std::sort(ext.begin(), ext.end());
            if (dim_of(ext) == d) cl.push_back(h);
        }
        closures.emplace(cl, l - d);
    }
    std::vector<std::pair<std::vector<int>, int>> order(closures.begin(), closures.end());
    std::sort(order.begin(), order.end(), [](const auto& a_, const auto& b_) {
        if (a_.second != b_.second) return a_.second < b_.second;
        return a_.first < b_.first;
    });
    std::map<std::vector<int>, Int> mob;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& [cl, rank] = order[i];
        if (rank == 0) {
            mob[cl] = 1;
            continue;
        }
        Int acc = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const auto& [cl2, rank2] = order[j];
            if (rank2 >= rank) continue;
            if (std::includes(cl.begin(), cl.end(), cl2.begin(), cl2.end())) acc += mob[cl2];
        }
        mob[cl] = -acc;
    }
    return mob;
}

std::vector<Int> minor_gcd_invariants(const IntMatrix& m) {
    std::vector<Int> out;
    Int prev = 1;
    const int top = std::min(m.rows(), m.cols());
    for (int k = 1; k <= top; ++k) {
        Int g = 0;
        for (const auto& rows : subsets_of_size(m.rows(), k))
            for (const auto& cols : subsets_of_size(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
                g = gcd(g, det(sub));
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

namespace {

using arrmod::lex_order;

std::string show_set(const std::set<long>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long p : s) {
        os << (first ? "" : ",") << p;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string show_tuple(const std::vector<int>& t) { // 1-based for humans
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
    os << ")";
    return os.str();
}

Poly form_of(const std::string& text, int l) {
    auto fs = parse_product(text, default_var_names(l));
    if (fs.size() != 1) throw DomainError("expected a single factor");
    return fs[0];
}

struct Suite {
    const CheckConfig& cfg;
    std::vector<PropertyResult> results;

    bool wants(const std::string& name) const {
        return cfg.only.empty() || name.find(cfg.only) != std::string::npos;
    }
    void run(const std::string& name, const std::function<std::string()>& body) {
        if (!wants(name)) return;
        PropertyResult r{name, false, ""};
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string check_echelon_shapes(Rng& rng) {
    for (int iter = 0; iter < 60; ++iter) {
        int rows = static_cast<int>(rng.uniform(1, 5));
        int cols = static_cast<int>(rng.uniform(1, 5));
        IntMatrix m = random_matrix(rng, rows, cols, 9);

        HnfResult hr = hnf(m);
        if (m * hr.u != hr.h) return "hnf transform identity failed\n" + m.to_string();
        if (abs(det(hr.u)) != 1) return "hnf transform not unimodular";
        int pc = 0;
        std::vector<int> pivot_rows;
        for (int r = 0; r < rows && pc < cols; ++r) {
            bool nonzero = false;
            for (int j = pc; j < cols; ++j) nonzero = nonzero || hr.h.at(r, j) != 0;
            if (!nonzero) continue;
            if (hr.h.at(r, pc) <= 0) return "hnf pivot not positive";
            for (int j = pc + 1; j < cols; ++j)
                if (hr.h.at(r, j) != 0) return "hnf entries right of pivot not cleared";
            for (int j = 0; j < pc; ++j)
                if (hr.h.at(r, j) < 0 || hr.h.at(r, j) >= hr.h.at(r, pc))
                    return "hnf entry left of pivot not reduced";
            ++pc;
        }

        SmithResult sm = snf(m);
        IntMatrix d(rows, cols);
        for (std::size_t i = 0; i < sm.d.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = sm.d[i];
        if (sm.s * m * sm.t != d) return "snf transform identity failed\n" + m.to_string();
        if (abs(det(sm.s)) != 1 || abs(det(sm.t)) != 1) return "snf transforms not unimodular";
        for (std::size_t i = 0; i < sm.d.size(); ++i) {
            if (sm.d[i] <= 0) return "invariant factor not positive";
            if (i + 1 < sm.d.size() && !mpz_divisible_p(sm.d[i + 1].get_mpz_t(), sm.d[i].get_mpz_t()))
                return "invariant factors do not form a divisor chain";
        }
        if (rank_rational(m) != static_cast<int>(sm.d.size()))
            return "rank disagrees with the number of invariant factors";
    }
    return "";
}

std::string check_smith_minor_gcd(Rng& rng, int iterations) {
    for (int iter = 0; iter < iterations; ++iter) {
        int rows = static_cast<int>(rng.uniform(1, 4));
        int cols = static_cast<int>(rng.uniform(1, 4));
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        if (snf(m).d != minor_gcd_invariants(m))
            return "smith form disagrees with minor-gcd divisors\n" + m.to_string();
    }
    return "";
}

std::string check_modular_rank_drop(Rng& rng) {
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int iter = 0; iter < 80; ++iter) {
        int rows = static_cast<int>(rng.uniform(1, 4));
        int cols = static_cast<int>(rng.uniform(1, 4));
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        SmithResult sm = snf(m);
        for (long p : primes) {
            bool divides = !sm.d.empty() &&
                           mpz_divisible_ui_p(sm.d.back().get_mpz_t(), static_cast<unsigned long>(p));
            bool drop = rank_mod_p(m, p) < rank_rational(m);
            if (divides != drop)
                return "largest invariant factor divisibility disagrees with mod-" +
                       std::to_string(p) + " rank drop\n" + m.to_string();
        }
    }
    return "";
}

} // namespace

std::vector<PropertyResult> run_checks(const CheckConfig& cfg) {
    Suite suite{cfg, {}};
    const TermOrder ord = cfg.order;

    std::vector<std::pair<std::string, Arrangement>> fx;
    for (const Fixture& f : fixtures()) fx.emplace_back(f.name, fixture(f.name));
    auto by_name = [&](const std::string& name) -> const Arrangement& {
        for (auto& [n, a] : fx)
            if (n == name) return a;
        throw DomainError("missing fixture " + name);
    };

    // built on first use so name-filtered runs of corpus-free properties stay cheap
    std::vector<Arrangement> corpus_storage;
    bool corpus_built = false;
    auto corpus = [&]() -> const std::vector<Arrangement>& {
        if (!corpus_built) {
            corpus_storage = random_central_essential(cfg.seed, cfg.random_count);
            corpus_built = true;
        }
        return corpus_storage;
    };

    std::vector<long> primes = primes_upto(cfg.prime_bound);
    std::vector<long> small_primes = primes_upto(13);

    suite.run("echelon-shapes", [&] {
        Rng rng(cfg.seed ^ 0xa5a5a5a5ULL);
        return check_echelon_shapes(rng);
    });

    suite.run("smith-minor-gcd", [&] {
        Rng rng(cfg.seed ^ 0x5a5a5a5aULL);
        return check_smith_minor_gcd(rng, 200);
    });

    suite.run("modular-rank-drop", [&] {
        Rng rng(cfg.seed ^ 0x777777ULL);
        return check_modular_rank_drop(rng);
    });

    suite.run("pair-basis-golden", [&] {
        std::vector<Poly> gens{form_of("x+y", 3), form_of("x+3*y+z", 3)};
        StrongBasis b = strong_groebner(gens, lex_order());
        std::vector<Poly> expect{form_of("x+y", 3), form_of("2*y+z", 3)};
        if (b.generators != expect) return std::string("basis mismatch for <x+y, x+3y+z>");
        if (lucky_excluded_primes(gens, lex_order()) != std::set<long>{2})
            return std::string("excluded primes of <x+y, x+3y+z> differ from {2}");
        // mod 2 the pair stays non-proportional even though 2 is excluded
        IntMatrix cols(3, 2, {1, 1, 1, 3, 0, 1});
        if (rank_mod_p(cols, 2) != 2) return std::string("pair unexpectedly proportional mod 2");
        return std::string();
    });

    suite.run("unit-square-basis-golden", [&] {
        // <2x+y, 2x-y> needs the degree-2 element y^2
        std::vector<Poly> gens{form_of("2*x+y", 2), form_of("(2*x-y)", 2)};
        StrongBasis b = strong_groebner(gens, lex_order());
        Poly ysq = Poly::variable(2, 1, lex_order()) * Poly::variable(2, 1, lex_order());
        std::vector<Poly> expect{form_of("2*x+y", 2), ysq, form_of("2*y", 2)};
        if (b.generators != expect) return std::string("basis mismatch for <2x+y, 2x-y>");
        return std::string();
    });

    suite.run("basis-verification-certified", [&] {
        GBOptions opt;
        opt.track_cofactors = true;
        std::vector<std::vector<Poly>> ideals;
        const Arrangement& skew = by_name("skew5");
        for (const auto& s : subsets_of_size(skew.size(), 2))
            ideals.push_back({skew.forms()[s[0]], skew.forms()[s[1]]});
        for (const auto& name : {"coords3", "mix4"}) {
            const Arrangement& a = by_name(name);
            Poly q = Poly::constant(a.dimension(), 1, lex_order());
            for (const Poly& f : a.forms()) q = q * f;
            std::vector<Poly> jac;
            for (int k = 0; k < a.dimension(); ++k) jac.push_back(partial_derivative(q, k));
            ideals.push_back(jac);
        }
        for (std::size_t i = 0; i < corpus().size() && i < 10; ++i) {
            std::vector<Poly> gens(corpus()[i].forms());
            ideals.push_back(gens);
        }
        for (const auto& gens : ideals) {
            StrongBasis b = strong_groebner(gens, ord, opt);
            BasisCheck c = verify_strong_basis(b, gens, ord);
            if (!c.ok) return "certificate failed: " + c.detail;
        }
        return std::string();
    });

    suite.run("strategy-invariance", [&] {
        GBOptions fifo;
        fifo.strategy = GBOptions::PairStrategy::Fifo;
        std::vector<std::vector<Poly>> ideals;
        const Arrangement& skew = by_name("skew5");
        for (const auto& s : subsets_of_size(skew.size(), 3)) {
            std::vector<Poly> gens;
            for (int i : s) gens.push_back(skew.forms()[i]);
            ideals.push_back(gens);
        }
        for (const auto& gens : ideals) {
            StrongBasis a = strong_groebner(gens, ord);
            StrongBasis b = strong_groebner(gens, ord, fifo);
            if (a.generators != b.generators || a.leading_ledger != b.leading_ledger)
                return std::string("pair-selection strategy changed the minimal basis");
        }
        return std::string();
    });

    suite.run("parser-roundtrip", [&] {
        for (const Fixture& f : fixtures()) {
            auto factors = parse_product(f.polynomial, default_var_names(f.l));
            for (const Poly& g : factors) {
                std::string s = poly_to_string(g, default_var_names(f.l));
                auto back = parse_product(s, default_var_names(f.l));
                if (back.size() != 1 || back[0] != g) return "roundtrip failed on " + s;
            }
        }
        for (std::size_t i = 0; i < corpus().size() && i < 20; ++i)
            for (const Poly& g : corpus()[i].forms()) {
                std::string s = poly_to_string(g, corpus()[i].var_names());
                auto back = parse_product(s, corpus()[i].var_names());
                if (back.size() != 1 || back[0] != g) return "roundtrip failed on " + s;
            }
        return std::string();
    });

    suite.run("parser-rejects", [&] {
        const std::vector<std::string> bad = {"x^2", "x*(x+1", "q+y", "(x-x)*y", "2*3", "(x*y)"};
        for (const std::string& s : bad) {
            try {
                parse_product(s, default_var_names(3));
                return "accepted malformed input: " + s;
            } catch (const ParseError&) {
            }
        }
        return std::string();
    });

    suite.run("essential-three-ways", [&] {
        auto routes_agree = [&](const Arrangement& a) {
            bool direct = is_essential(a);
            bool coned_rank = rank_rational(a.coned_matrix()) == a.dimension() + 1;
            bool tuples = !projective_tuples(a).full();
            return direct == coned_rank && coned_rank == tuples;
        };
        for (auto& [name, a] : fx)
            if (!routes_agree(a)) return "essentiality routes disagree on " + name;
        for (std::size_t i = 0; i < corpus().size() && i < 20; ++i)
            if (!routes_agree(corpus()[i])) return std::string("essentiality routes disagree on corpus");
        return std::string();
    });

    suite.run("central-tuples-inside", [&] {
        for (auto& [name, a] : fx) {
            if (!a.central()) continue;
            TupleSet bar = projective_tuples(a);
            for (const auto& t : subsets_of_size(a.size(), a.dimension() + 1))
                if (std::find(bar.tuples.begin(), bar.tuples.end(), t) == bar.tuples.end())
                    return "tuple " + show_tuple(t) + " missing for " + name;
        }
        return std::string();
    });

    suite.run("index-set-agreement", [&] {
        for (std::size_t i = 0; i < corpus().size() && i < 20; ++i) {
            const Arrangement& a = corpus()[i];
            for (long p : small_primes) {
                ModularArrangement m;
                try {
                    m = reduce_mod(a, p);
                } catch (const NotGoodError&) {
                    continue;
                }
                bool vertex_eq = vertex_tuples(a) == vertex_tuples(m);
                bool proj_eq = projective_tuples(a) == projective_tuples_mod(a, p);
                if (vertex_eq != proj_eq)
                    return "index-set equivalence broken at p=" + std::to_string(p);
            }
        }
        return std::string();
    });

    suite.run("mobius-brute-force", [&] {
        auto matches = [&](const Arrangement& a, const std::string& label) -> std::string {
            LatticeModel lat = build_lattice(a);
            auto expect = brute_force_mobius(a);
            if (lat.flats.size() != expect.size()) return "flat count differs on " + label;
            for (const Flat& f : lat.flats) {
                auto it = expect.find(f.hyperplanes);
                if (it == expect.end()) return "closure set missing on " + label;
                if (it->second != f.mobius) return "mobius differs on " + label;
            }
            return "";
        };
        for (auto& [name, a] : fx) {
            std::string r = matches(a, name);
            if (!r.empty()) return r;
        }
        for (std::size_t i = 0; i < corpus().size() && i < 10; ++i) {
            std::string r = matches(corpus()[i], "corpus");
            if (!r.empty()) return r;
        }
        return std::string();
    });

    suite.run("mobius-interval-zero", [&] {
        for (auto& [name, a] : fx) {
            LatticeModel lat = build_lattice(a);
            for (const Flat& x : lat.flats) {
                if (x.rank == 0) continue;
                Int acc = 0;
                for (const Flat& y : lat.flats)
                    if (std::includes(x.hyperplanes.begin(), x.hyperplanes.end(),
                                      y.hyperplanes.begin(), y.hyperplanes.end()))
                        acc += y.mobius;
                if (acc != 0) return "interval sum nonzero on " + name;
            }
        }
        return std::string();
    });

    suite.run("charpoly-two-routes", [&] {
        auto agree = [&](const Arrangement& a) {
            return characteristic_polynomial(build_lattice(a)) == char_from_tutte(a);
        };
        for (auto& [name, a] : fx)
            if (!agree(a)) return "routes disagree on " + name;
        for (std::size_t i = 0; i < corpus().size() && i < 20; ++i)
            if (!agree(corpus()[i])) return std::string("routes disagree on corpus");
        return std::string();
    });

    suite.run("charpoly-monic-root-one", [&] {
        for (auto& [name, a] : fx) {
            auto chi = characteristic_polynomial(build_lattice(a));
            if (chi.back() != 1) return "characteristic polynomial not monic on " + name;
            if (a.central() && a.size() > 0) {
                Int at_one = 0;
                for (const Int& c : chi) at_one += c;
                if (at_one != 0) return "chi(1) != 0 on " + name;
            }
        }
        return std::string();
    });

    suite.run("tutte-golden", [&] {
        BivariatePoly x3 = BivariatePoly::var_x().pow(3);
        if (tutte(by_name("coords3")) != x3) return std::string("coords3 differs from x^3");
        BivariatePoly braid = BivariatePoly::var_x().pow(2) + BivariatePoly::var_x() +
                              BivariatePoly::var_y();
        if (tutte(by_name("braid3")) != braid) return std::string("braid3 differs from x^2+x+y");
        if (tutte(by_name("single1")) != BivariatePoly::var_x())
            return std::string("single hyperplane differs from x");
        Arrangement empty1 = Arrangement::build({}, 1);
        if (tutte(empty1) != BivariatePoly::constant(1) ||
            coboundary(empty1) != BivariatePoly::constant(1))
            return std::string("empty arrangement polynomials differ from 1");
        BivariatePoly xy1 = (BivariatePoly::var_x() + BivariatePoly::var_y() -
                             BivariatePoly::constant(1)).pow(3);
        if (coboundary(by_name("coords3")) != xy1)
            return std::string("coords3 coboundary differs from (x+y-1)^3");
        return std::string();
    });

    suite.run("tutte-coboundary-roundtrip", [&] {
        auto holds = [&](const Arrangement& a) {
            int rk = arrangement_rank(a);
            BivariatePoly t = tutte(a), cb = coboundary(a);
            return tutte_to_coboundary_identity(t, cb, rk) &&
                   coboundary_to_tutte_identity(t, cb, rk);
        };
        for (auto& [name, a] : fx)
            if (!holds(a)) return "roundtrip identities fail on " + name;
        for (std::size_t i = 0; i < corpus().size() && i < 20; ++i)
            if (!holds(corpus()[i])) return std::string("roundtrip identities fail on corpus");
        return std::string();
    });

    suite.run("flat-rank-columns", [&] {
        for (auto& [name, a] : fx) {
            LatticeModel lat = build_lattice(a);
            for (const Flat& f : lat.flats) {
                if (f.hyperplanes.empty()) continue;
                if (subset_rank(a.coefficients(), f.hyperplanes, 0) != f.rank)
                    return "flat rank differs from column rank on " + name;
            }
        }
        return std::string();
    });

    suite.run("normalization-idempotent", [&] {
        auto twice = [&](const Arrangement& a) {
            Arrangement b = Arrangement::build(a.forms(), a.dimension(), a.var_names());
            return b.forms() == a.forms() && b.coefficients() == a.coefficients() &&
                   b.constants() == a.constants();
        };
        for (auto& [name, a] : fx)
            if (!twice(a)) return "rebuild changed " + name;
        auto content = parse_product("(2*x+4*y)*z", default_var_names(3));
        Arrangement c = Arrangement::build(content, 3);
        if (poly_to_string(c.forms()[0], c.var_names()) != "x + 2*y")
            return std::string("content normalization failed");
        return std::string();
    });

    suite.run("arrangement-rejects", [&] {
        try {
            Arrangement::build(parse_product("x*(3*x)", default_var_names(2)), 2);
            return std::string("accepted proportional forms");
        } catch (const DuplicateHyperplaneError&) {
        }
        try {
            Poly sq = Poly::variable(2, 0, lex_order()) * Poly::variable(2, 0, lex_order());
            Arrangement::build({sq}, 2);
            return std::string("accepted a quadratic form");
        } catch (const DomainError&) {
        }
        try {
            Arrangement::build({Poly(2, lex_order(), 0)}, 2);
            return std::string("accepted the zero form");
        } catch (const DomainError&) {
        }
        try {
            reduce_mod(by_name("affine3"), 3);
            return std::string("reduced a non-central arrangement");
        } catch (const NonCentralError&) {
        }
        try {
            vertex_tuples(by_name("affine3"));
            return std::string("vertex tuples accepted a non-central arrangement");
        } catch (const NonCentralError&) {
        }
        try {
            reduce_mod(by_name("skew5"), 2);
            return std::string("p=2 accepted for the skew fixture");
        } catch (const NotGoodError& e) {
            std::vector<int> pair{e.i, e.j};
            if (rank_mod_p(by_name("skew5").coefficients().selected_columns(pair), 2) >= 2)
                return std::string("reported witness pair is not proportional mod 2");
        }
        return std::string();
    });

    suite.run("goodness-finite", [&] {
        for (auto& [name, a] : fx) {
            if (!a.central()) continue;
            std::set<long> bad = nongood_primes(a);
            for (long p : primes) {
                bool threw = false;
                try {
                    reduce_mod(a, p);
                } catch (const NotGoodError&) {
                    threw = true;
                }
                if (threw != (bad.count(p) > 0))
                    return "goodness scan disagrees with reduce on " + name + " at p=" +
                           std::to_string(p);
            }
        }
        return std::string();
    });

    suite.run("vertex-tuples-golden", [&] {
        TupleSet boolean = vertex_tuples(by_name("coords3"));
        if (boolean.tuples != std::vector<std::vector<int>>{{0, 1, 2}})
            return std::string("coords3 vertex tuples differ from {(1,2,3)}");
        TupleSet mix = vertex_tuples(by_name("mix5"));
        if (mix.tuples.size() != 9) return std::string("mix5 should have 9 vertex tuples");
        for (const auto& t : mix.tuples)
            if (t == std::vector<int>{0, 1, 3})
                return std::string("dependent triple (1,2,4) wrongly included");
        TupleSet mix2 = vertex_tuples_mod(by_name("mix5"), 2);
        std::vector<std::vector<int>> lost;
        for (const auto& t : mix.tuples)
            if (std::find(mix2.tuples.begin(), mix2.tuples.end(), t) == mix2.tuples.end())
                lost.push_back(t);
        if (lost != std::vector<std::vector<int>>{{0, 2, 4}})
            return std::string("mod-2 should drop exactly the triple (1,3,5)");
        return std::string();
    });

    suite.run("equivalence-witness-golden", [&] {
        EquivalenceResult r = comb_equivalent_mod(by_name("mix5"), 2);
        if (r.equivalent) return std::string("mix5 should differ from its mod-2 reduction");
        if (r.witness != std::vector<int>{0, 2, 4})
            return "witness " + show_tuple(r.witness) + " is not the least subset (1,3,5)";
        const Arrangement& skew = by_name("skew5");
        if (!comb_equivalent(skew, reduce_mod(skew, 3)).equivalent)
            return std::string("skew5 should match its mod-3 reduction");
        for (auto& [name, a] : fx)
            if (!comb_equivalent(a, a).equivalent) return "self-comparison failed on " + name;
        return std::string();
    });

    suite.run("projective-crosscheck", [&] {
        for (auto& [name, a] : fx) {
            if (!is_essential(a)) continue;
            if (!projective_equivalence_crosscheck(a, a)) return "self crosscheck failed on " + name;
        }
        const Arrangement& mix = by_name("mix5");
        if (!projective_equivalence_crosscheck(mix, reduce_mod(mix, 2)))
            return std::string("crosscheck failed on mix5 mod 2");
        for (std::size_t i = 0; i < corpus().size() && i < 15; ++i) {
            const Arrangement& a = corpus()[i];
            for (long p : small_primes) {
                ModularArrangement m;
                try {
                    m = reduce_mod(a, p);
                } catch (const NotGoodError&) {
                    continue;
                }
                if (rank_mod_p(m.coeffs, p) != m.l) continue;
                if (!projective_equivalence_crosscheck(a, m))
                    return "crosscheck failed on corpus at p=" + std::to_string(p);
            }
        }
        return std::string();
    });

    suite.run("nongood-golden", [&] {
        if (nongood_primes(by_name("skew5")) != std::set<long>{2})
            return std::string("skew5 non-good primes differ from {2}");
        if (!nongood_primes(by_name("mix4")).empty())
            return std::string("mix4 should have no non-good primes");
        if (!nongood_primes(by_name("coords3")).empty())
            return std::string("coords3 should have no non-good primes");
        return std::string();
    });

    suite.run("klucky-golden", [&] {
        if (k_lucky_excluded(by_name("mix5"), 3, lex_order()) != std::set<long>{2})
            return std::string("mix5 k=3 exclusions differ from {2}");
        if (k_lucky_excluded(by_name("mix4"), 2, lex_order()) != std::set<long>{2, 3})
            return std::string("mix4 k=2 exclusions differ from {2,3}");
        for (int k = 1; k <= 3; ++k)
            if (!k_lucky_excluded(by_name("coords3"), k, lex_order()).empty())
                return std::string("coords3 should have no exclusions");
        return std::string();
    });

    suite.run("jacobian-golden", [&] {
        if (jacobian_lucky_excluded(by_name("mix5"), lex_order()) != std::set<long>{2, 3, 5})
            return std::string("mix5 jacobian exclusions differ from {2,3,5}");
        if (!jacobian_lucky_excluded(by_name("coords3"), lex_order()).empty())
            return std::string("coords3 jacobian exclusions should be empty");
        if (!jacobian_lucky_excluded(by_name("single1"), lex_order()).empty())
            return std::string("single hyperplane jacobian exclusions should be empty");
        return std::string();
    });

    suite.run("rho-golden", [&] {
        if (rho_period(by_name("skew5")) != 16) return std::string("skew5 period differs from 16");
        if (rho_period(by_name("coords3")) != 1) return std::string("coords3 period differs from 1");
        if (rho_period(by_name("braid3")) != 1) return std::string("braid3 period differs from 1");
        return std::string();
    });

    suite.run("period-support", [&] {
        for (auto& [name, a] : fx) {
            if (!a.central() || !is_essential(a)) continue;
            PeriodSupportCheck c = period_support_check(a, ord);
            if (!c.equal)
                return "support mismatch on " + name + ": " + show_set(c.left) + " vs " +
                       show_set(c.right);
        }
        for (const Arrangement& a : corpus()) {
            PeriodSupportCheck c = period_support_check(a, ord);
            if (!c.equal)
                return "support mismatch on corpus: " + show_set(c.left) + " vs " +
                       show_set(c.right);
        }
        return std::string();
    });

    suite.run("nongood-inside-nonlucky2", [&] {
        auto contained = [&](const Arrangement& a) {
            if (a.dimension() < 2) return true;
            std::set<long> bad = nongood_primes(a);
            std::set<long> l2 = k_lucky_excluded(a, 2, ord);
            return std::includes(l2.begin(), l2.end(), bad.begin(), bad.end());
        };
        for (auto& [name, a] : fx) {
            if (!a.central()) continue;
            if (!contained(a)) return "containment fails on " + name;
        }
        for (const Arrangement& a : corpus())
            if (!contained(a)) return std::string("containment fails on corpus");
        return std::string();
    });

    suite.run("main-equivalence", [&] {
        for (const Arrangement& a : corpus()) {
            std::set<long> bad = nongood_primes(a);
            std::set<long> unlucky = k_lucky_excluded(a, a.dimension(), ord);
            Int rho = rho_period(a);
            for (long p : primes) {
                bool sweep = comb_equivalent_mod(a, p).equivalent;
                bool scan = !bad.count(p) && !unlucky.count(p);
                bool coprime = gcd(rho, Int(p)) == 1;
                if (sweep != scan || scan != coprime)
                    return "predicates disagree at p=" + std::to_string(p) + " (sweep " +
                           std::to_string(sweep) + ", scan " + std::to_string(scan) +
                           ", coprime " + std::to_string(coprime) + ")";
                if (!bad.count(p)) {
                    if (comb_equivalent(a, reduce_mod(a, p)).equivalent != sweep)
                        return std::string("modular view disagrees with raw sweep at p=") +
                               std::to_string(p);
                }
            }
        }
        return std::string();
    });

    suite.run("proportional-pairs-nonlucky", [&] {
        for (auto& [name, a] : fx)
            for (long p : small_primes)
                if (!proportional_pairs_nonlucky(a, p, ord))
                    return "collapse without exclusion on " + name + " at p=" + std::to_string(p);
        // converse failure: 2 is excluded for <x+y, x+3y+z> though the pair
        // stays non-proportional mod 2
        std::vector<Poly> pair{form_of("x+y", 3), form_of("x+3*y+z", 3)};
        if (!lucky_excluded_primes(pair, lex_order()).count(2))
            return std::string("expected 2 excluded for <x+y, x+3y+z>");
        IntMatrix cols(3, 2, {1, 1, 1, 3, 0, 1});
        if (rank_mod_p(cols, 2) != 2) return std::string("pair unexpectedly proportional mod 2");
        return std::string();
    });

    suite.run("histogram-coboundary", [&] {
        const Arrangement& mix = by_name("mix5");
        BivariatePoly cb = coboundary(mix);
        for (long p : {3L, 5L, 7L, 11L}) {
            std::vector<Int> hist = hit_histogram(mix, p, cfg.threads);
            std::vector<Int> slice = cb.eval_x(p);
            hist.resize(std::max(hist.size(), slice.size()), 0);
            slice.resize(hist.size(), 0);
            if (hist != slice) return "histogram differs from coboundary at p=" + std::to_string(p);
        }
        return std::string();
    });

    suite.run("interpolated-coboundary", [&] {
        const Arrangement& mix = by_name("mix5");
        if (coboundary_from_counts(mix, {3, 5, 7, 11}, ord, cfg.threads) != coboundary(mix))
            return std::string("interpolation differs from subset expansion on mix5");
        const Arrangement& boolean = by_name("coords3");
        if (coboundary_from_counts(boolean, {2, 3, 5, 7}, ord, cfg.threads) != coboundary(boolean))
            return std::string("interpolation differs from subset expansion on coords3");
        const Arrangement& single = by_name("single1");
        BivariatePoly expect = BivariatePoly::var_x() + BivariatePoly::var_y() -
                               BivariatePoly::constant(1);
        if (coboundary_from_counts(single, {2, 3}, ord, cfg.threads) != expect)
            return std::string("single hyperplane interpolation differs from x+y-1");
        return std::string();
    });

    suite.run("complement-counts", [&] {
        for (long q : {5L, 6L, 7L}) {
            Int expect = (Int(q) - 1) * (Int(q) - 1) * (Int(q) - 1);
            if (count_complement(by_name("coords3"), q, cfg.threads) != expect)
                return "coords3 complement count differs at q=" + std::to_string(q);
        }
        if (count_complement(by_name("braid3"), 5, cfg.threads) != 60)
            return std::string("braid3 complement count at q=5 differs from 60");
        auto count_matches_charpoly = [&](const Arrangement& a) -> bool {
            std::set<long> bad = nongood_primes(a);
            std::set<long> unlucky = k_lucky_excluded(a, a.dimension(), ord);
            auto chi = characteristic_polynomial(build_lattice(a));
            for (long p : small_primes) {
                if (bad.count(p) || unlucky.count(p)) continue;
                Int value = 0, pw = 1;
                for (const Int& c : chi) {
                    value += c * pw;
                    pw *= p;
                }
                if (count_complement(a, p, cfg.threads) != value) return false;
            }
            return true;
        };
        for (auto& [name, a] : fx) {
            if (!a.central() || !is_essential(a)) continue;
            if (!count_matches_charpoly(a)) return "count differs from chi on " + name;
        }
        for (std::size_t i = 0; i < corpus().size() && i < 10; ++i)
            if (!count_matches_charpoly(corpus()[i])) return std::string("count differs from chi on corpus");
        return std::string();
    });

    suite.run("quasi-polynomial-fit", [&] {
        const Arrangement& skew = by_name("skew5");
        Int rho = rho_period(skew);
        long period = to_long(rho);
        for (long r : {1L, 5L, 8L, 0L}) {
            std::vector<std::pair<long, Int>> samples;
            for (long q = 17; q <= 120 && static_cast<int>(samples.size()) < 5; ++q)
                if (q % period == r) samples.emplace_back(q, count_complement(skew, q, cfg.threads));
            auto fit = polynomial_fit(samples, skew.dimension());
            if (!fit) return "no exact cubic through residue class " + std::to_string(r);
            if (fit->size() != 4 || (*fit)[3] != 1)
                return "fit not monic cubic on residue class " + std::to_string(r);
        }
        return std::string();
    });

    return suite.results;
}

} // namespace arrmod::checks
