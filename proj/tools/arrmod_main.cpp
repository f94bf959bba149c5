#include <CLI11.hpp>
#include <iostream>
#include <set>

#include "arrmod/checks.hpp"
#include "arrmod/enumpoly.hpp"
#include "arrmod/io.hpp"
#include "arrmod/lattice.hpp"
#include "arrmod/primescan.hpp"
#include "arrmod/strong_gb.hpp"

using namespace arrmod;

namespace {

struct CommonInput {
    std::vector<std::string> exprs; // -e, repeatable; factors concatenate
    std::string file;               // -f, JSON input
    std::vector<std::string> vars;  // --vars override
    std::string order_name = "lex";
    bool json_out = false;
    int threads = 0;
};

void add_input_flags(CLI::App* sub, CommonInput& in, bool want_arrangement = true) {
    if (want_arrangement) {
        sub->add_option("-e,--expr", in.exprs, "defining polynomial, a product of linear factors");
        sub->add_option("-f,--file", in.file, "JSON input file");
        sub->add_option("--vars", in.vars, "variable names (default: inferred from -e)")
            ->delimiter(',');
    }
    sub->add_option("--order", in.order_name, "term order: lex|degrevlex")
        ->check(CLI::IsMember({"lex", "degrevlex"}));
    sub->add_flag("--json", in.json_out, "machine-readable output");
    sub->add_option("--threads", in.threads, "worker threads (0 = all cores)");
}

Arrangement load_arrangement(const CommonInput& in) {
    if (!in.file.empty() && !in.exprs.empty())
        throw InputError("pass either -e or -f, not both");
    if (!in.file.empty()) return arrangement_from_json_file(in.file);
    if (in.exprs.empty()) throw InputError("no input arrangement; pass -e or -f");
    std::vector<std::string> vars = in.vars.empty() ? infer_var_names(in.exprs) : in.vars;
    std::vector<Poly> forms;
    for (const std::string& e : in.exprs)
        for (Poly& f : parse_product(e, vars)) forms.push_back(std::move(f));
    return Arrangement::build(forms, static_cast<int>(vars.size()), vars);
}

// library entry points demand central input; affine input means its cone
Arrangement central_view(const Arrangement& a) {
    if (a.central()) return a;
    Arrangement c = cone(a);
    std::cerr << "note: input is affine; operating on its cone in dimension " << c.dimension()
              << "\n";
    return c;
}

std::string poly_list(const std::vector<Int>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += coeffs[i].get_str();
    }
    return out + "]";
}

std::string bivariate_to_text(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<BivariatePoly::Key, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        auto [ij, c] = terms[k];
        bool neg = c < 0;
        Int mag = abs(c);
        out += k == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        auto power = [](const std::string& v, int e) {
            if (e == 0) return std::string();
            if (e == 1) return v;
            return v + "^" + std::to_string(e);
        };
        mono = power("x", ij.first);
        std::string my = power("y", ij.second);
        if (!mono.empty() && !my.empty()) mono += "*";
        mono += my;
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

json set_to_json(const std::set<long>& s) {
    json arr = json::array();
    for (long p : s) arr.push_back(p);
    return arr;
}

std::string set_to_text(const std::set<long>& s) {
    std::string out = "{";
    bool first = true;
    for (long p : s) {
        out += (first ? "" : ", ") + std::to_string(p);
        first = false;
    }
    return out + "}";
}

std::string tuple_text(const std::vector<int>& t, const Arrangement& a) {
    std::string idx = "(", forms;
    for (std::size_t i = 0; i < t.size(); ++i) {
        idx += (i ? "," : "") + std::to_string(t[i] + 1);
        forms += (i ? ", " : "") + poly_to_string(a.forms()[t[i]], a.var_names());
    }
    return idx + ") {" + forms + "}";
}

json witness_json(const std::vector<int>& w) {
    json arr = json::array();
    for (int i : w) arr.push_back(i);
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorics of rational hyperplane arrangements modulo primes"};
    app.require_subcommand(1);

    CommonInput in;
    long prime = 0, q = 0;
    std::vector<long> prime_list;
    bool include_q = false;
    std::uint64_t seed = 1;
    int random_count = 50;
    long prime_bound = 50;
    std::string only;

    auto* sc_parse = app.add_subcommand("parse", "normalize and print the arrangement");
    add_input_flags(sc_parse, in);

    auto* sc_lattice = app.add_subcommand("lattice", "intersection poset with Mobius values");
    add_input_flags(sc_lattice, in);
    sc_lattice->add_option("--prime", prime, "build over F_p instead of Q");

    auto* sc_charpoly = app.add_subcommand("charpoly", "characteristic polynomial, lowest degree first");
    add_input_flags(sc_charpoly, in);
    sc_charpoly->add_option("--prime", prime, "build over F_p instead of Q");

    auto* sc_tutte = app.add_subcommand("tutte", "Tutte polynomial by subset expansion");
    add_input_flags(sc_tutte, in);

    auto* sc_cobound = app.add_subcommand("coboundary", "coboundary polynomial by subset expansion");
    add_input_flags(sc_cobound, in);

    auto* sc_ff = app.add_subcommand("ffmethod",
                                     "coboundary polynomial from per-prime point counts");
    add_input_flags(sc_ff, in);
    sc_ff->add_option("--primes", prime_list, "primes to count over (need at least l+1)")
        ->delimiter(',')
        ->required();

    auto* sc_count = app.add_subcommand("count", "points off every hyperplane over Z/q");
    add_input_flags(sc_count, in);
    sc_count->add_option("--q", q, "modulus (any positive integer)")->required();

    auto* sc_primes = app.add_subcommand("primes", "good/lucky scan, invariant-factor period");
    add_input_flags(sc_primes, in);

    auto* sc_equiv = app.add_subcommand("equiv", "compare with the mod-p reduction");
    add_input_flags(sc_equiv, in);
    sc_equiv->add_option("--prime", prime, "prime p")->required();

    auto* sc_gb = app.add_subcommand("gb", "minimal strong Groebner basis over Z");
    add_input_flags(sc_gb, in);

    auto* sc_jac = app.add_subcommand("jacobian",
                                      "excluded primes of the partial-derivative ideal");
    add_input_flags(sc_jac, in);
    sc_jac->add_flag("--include-q", include_q, "add the defining polynomial to the generators");

    auto* sc_check = app.add_subcommand("check", "run the property suite");
    add_input_flags(sc_check, in, false);
    sc_check->add_option("--seed", seed, "corpus seed");
    sc_check->add_option("--count", random_count, "random arrangements in the corpus");
    sc_check->add_option("--prime-bound", prime_bound, "scan primes up to this bound");
    sc_check->add_option("--only", only, "run properties whose name contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    TermOrder order = *order_from_name(in.order_name);

    if (sc_parse->parsed()) {
        Arrangement a = load_arrangement(in);
        if (in.json_out) {
            json cols = json::array();
            for (int j = 0; j < a.size(); ++j) {
                json col = json::array();
                for (int i = 0; i < a.dimension(); ++i)
                    col.push_back(int_to_json(a.coefficients().at(i, j)));
                cols.push_back(col);
            }
            json out = {{"schema", 1},
                        {"vars", a.var_names()},
                        {"l", a.dimension()},
                        {"n", a.size()},
                        {"central", a.central()},
                        {"matrix", cols}};
            json forms = json::array();
            for (const Poly& f : a.forms()) forms.push_back(poly_to_string(f, a.var_names()));
            out["forms"] = forms;
            if (!a.central()) {
                json cs = json::array();
                for (const Int& c : a.constants()) cs.push_back(int_to_json(c));
                out["constants"] = cs;
            }
            emit(out);
        } else {
            std::cout << "dimension: " << a.dimension() << "\n"
                      << "hyperplanes: " << a.size() << "\n"
                      << "central: " << (a.central() ? "yes" : "no") << "\n";
            for (int i = 0; i < a.size(); ++i)
                std::cout << "form " << i + 1 << ": " << poly_to_string(a.forms()[i], a.var_names())
                          << "\n";
        }
        return 0;
    }

    if (sc_lattice->parsed() || sc_charpoly->parsed()) {
        Arrangement a = load_arrangement(in);
        LatticeModel lat = prime ? build_lattice(reduce_mod(central_view(a), prime))
                                 : build_lattice(a);
        if (sc_charpoly->parsed()) {
            std::vector<Int> chi = characteristic_polynomial(lat);
            if (in.json_out)
                emit({{"schema", 1}, {"charpoly", univariate_to_json(chi)}});
            else
                std::cout << poly_list(chi) << "\n";
            return 0;
        }
        if (in.json_out) {
            json flats = json::array();
            for (const Flat& f : lat.flats)
                flats.push_back({{"key", f.key},
                                 {"rank", f.rank},
                                 {"mobius", int_to_json(f.mobius)},
                                 {"hyperplanes", witness_json(f.hyperplanes)}});
            emit({{"schema", 1}, {"p", lat.p}, {"flats", flats}});
        } else {
            for (const Flat& f : lat.flats) {
                std::cout << "rank " << f.rank << "  mu " << f.mobius.get_str() << "  {";
                for (std::size_t i = 0; i < f.hyperplanes.size(); ++i)
                    std::cout << (i ? "," : "") << f.hyperplanes[i] + 1;
                std::cout << "}\n";
            }
        }
        return 0;
    }

    if (sc_tutte->parsed() || sc_cobound->parsed()) {
        Arrangement a = load_arrangement(in);
        BivariatePoly p = sc_tutte->parsed() ? tutte(a) : coboundary(a);
        if (in.json_out)
            emit({{"schema", 1}, {"coefficients", bivariate_to_json(p)}});
        else
            std::cout << bivariate_to_text(p) << "\n";
        return 0;
    }

    if (sc_ff->parsed()) {
        Arrangement a = central_view(load_arrangement(in));
        BivariatePoly p = coboundary_from_counts(a, prime_list, order, in.threads);
        if (in.json_out)
            emit({{"schema", 1}, {"coefficients", bivariate_to_json(p)}});
        else
            std::cout << bivariate_to_text(p) << "\n";
        return 0;
    }

    if (sc_count->parsed()) {
        Arrangement a = load_arrangement(in);
        if (q < 1) throw InputError("--q must be positive");
        std::vector<Int> hist = hit_histogram(a, q, in.threads);
        if (in.json_out)
            emit({{"schema", 1},
                  {"q", q},
                  {"count", int_to_json(hist.empty() ? Int(0) : hist[0])},
                  {"histogram", univariate_to_json(hist)}});
        else
            std::cout << (hist.empty() ? Int(0) : hist[0]).get_str() << "\n";
        return 0;
    }

    if (sc_primes->parsed()) {
        Arrangement a = central_view(load_arrangement(in));
        PrimeReport r = prime_report(a, order);
        if (in.json_out) {
            json nonlucky = json::object();
            for (const auto& [k, s] : r.nonlucky_by_k) nonlucky[std::to_string(k)] = set_to_json(s);
            emit({{"schema", 1},
                  {"nongood", set_to_json(r.nongood)},
                  {"nonlucky", nonlucky},
                  {"rho0", int_to_json(r.rho0)},
                  {"equivalent_iff_coprime_to", int_to_json(r.rho0)}});
        } else {
            std::cout << "nongood: " << set_to_text(r.nongood) << "\n";
            for (const auto& [k, s] : r.nonlucky_by_k)
                std::cout << "nonlucky k=" << k << ": " << set_to_text(s) << "\n";
            std::cout << "rho0: " << r.rho0.get_str() << "\n"
                      << "equivalent iff p coprime to " << r.rho0.get_str() << "\n";
        }
        return 0;
    }

    if (sc_equiv->parsed()) {
        Arrangement a = central_view(load_arrangement(in));
        EquivalenceResult r = comb_equivalent_mod(a, prime);
        if (in.json_out) {
            json out = {{"schema", 1}, {"prime", prime}, {"equivalent", r.equivalent}};
            if (!r.equivalent) out["witness"] = witness_json(r.witness);
            emit(out);
        } else {
            std::cout << "equivalent mod " << prime << ": " << (r.equivalent ? "yes" : "no")
                      << "\n";
            if (!r.equivalent) std::cout << "witness: " << tuple_text(r.witness, a) << "\n";
        }
        return 0;
    }

    if (sc_gb->parsed()) {
        if (in.file.empty() && in.exprs.empty())
            throw InputError("no generators; pass -e or -f");
        std::vector<Poly> gens;
        std::vector<std::string> vars;
        if (!in.file.empty()) {
            Arrangement a = arrangement_from_json_file(in.file);
            gens = a.forms();
            vars = a.var_names();
        } else {
            vars = in.vars.empty() ? infer_var_names(in.exprs) : in.vars;
            for (const std::string& e : in.exprs)
                for (Poly& f : parse_product(e, vars, order)) gens.push_back(std::move(f));
        }
        if (order.kind != lex_order().kind)
            for (Poly& g : gens) g = g.with_order(order);
        StrongBasis b = strong_groebner(gens, order);
        std::set<long> excluded = lucky_excluded_primes(gens, order);
        if (in.json_out) {
            json basis = json::array(), ledger = json::array();
            for (const Poly& g : b.generators) basis.push_back(poly_to_string(g, vars));
            for (const auto& [lc, lt] : b.leading_ledger)
                ledger.push_back({{"lc", int_to_json(lc)}, {"lt", monomial_to_string(lt, vars)}});
            emit({{"schema", 1},
                  {"order", order_name(order)},
                  {"basis", basis},
                  {"leading", ledger},
                  {"excluded_primes", set_to_json(excluded)}});
        } else {
            std::string line = "[";
            for (std::size_t i = 0; i < b.generators.size(); ++i) {
                if (i) line += ", ";
                line += "\"" + poly_to_string(b.generators[i], vars) + "\"";
            }
            std::cout << line << "]\n"
                      << "excluded primes: " << set_to_text(excluded) << "\n";
        }
        return 0;
    }

    if (sc_jac->parsed()) {
        Arrangement a = central_view(load_arrangement(in));
        std::set<long> excluded = jacobian_lucky_excluded(a, order, include_q);
        if (in.json_out)
            emit({{"schema", 1}, {"excluded_primes", set_to_json(excluded)}});
        else
            std::cout << "excluded primes: " << set_to_text(excluded) << "\n";
        return 0;
    }

    if (sc_check->parsed()) {
        checks::CheckConfig cfg;
        cfg.seed = seed;
        cfg.random_count = random_count;
        cfg.prime_bound = prime_bound;
        cfg.only = only;
        cfg.order = order;
        cfg.threads = in.threads;
        auto results = checks::run_checks(cfg);
        if (results.empty()) {
            std::cerr << "error: no property matches --only '" << only << "'\n";
            return 2;
        }
        bool all = true;
        if (in.json_out) {
            json arr = json::array();
            for (const auto& r : results) {
                arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                all = all && r.pass;
            }
            emit({{"schema", 1}, {"properties", arr}, {"pass", all}});
        } else {
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.pass) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "all properties pass" : "FAILURES present") << "\n";
        }
        return all ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
