#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrmod/enumpoly.hpp"
#include "arrmod/io.hpp"
#include "arrmod/lattice.hpp"
#include "arrmod/primescan.hpp"
#include "arrmod/strong_gb.hpp"

namespace py = pybind11;
using namespace arrmod;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Arrangement make(const std::string& poly, const std::vector<std::string>& vars) {
    std::vector<std::string> names = vars.empty() ? infer_var_names({poly}) : vars;
    return Arrangement::build(parse_product(poly, names), static_cast<int>(names.size()), names);
}

TermOrder order_of(const std::string& name) {
    auto o = order_from_name(name);
    if (!o) throw InputError("unknown term order: " + name);
    return *o;
}

py::list ints(const std::vector<Int>& v) {
    py::list out;
    for (const Int& c : v) out.append(to_py(c));
    return out;
}

py::list longs(const std::set<long>& v) {
    py::list out;
    for (long c : v) out.append(c);
    return out;
}

py::dict bivariate(const BivariatePoly& p) {
    py::dict out;
    for (const auto& [ij, c] : p.terms())
        out[py::make_tuple(ij.first, ij.second)] = to_py(c);
    return out;
}

} // namespace

PYBIND11_MODULE(arrmod, m) {
    m.doc() = "exact combinatorics of rational hyperplane arrangements modulo primes";

    m.def(
        "charpoly",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return ints(characteristic_polynomial(build_lattice(make(poly, vars))));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "characteristic polynomial coefficients, lowest degree first");

    m.def(
        "tutte",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return bivariate(tutte(make(poly, vars)));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "Tutte polynomial as {(i, j): coefficient}");

    m.def(
        "coboundary",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return bivariate(coboundary(make(poly, vars)));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "coboundary polynomial as {(i, j): coefficient}");

    m.def(
        "coboundary_interpolated",
        [](const std::string& poly, const std::vector<long>& primes,
           const std::vector<std::string>& vars, int threads) {
            return bivariate(coboundary_from_counts(make(poly, vars), primes, lex_order(),
                                                    threads));
        },
        py::arg("poly"), py::arg("primes"), py::arg("vars") = std::vector<std::string>{},
        py::arg("threads") = 0, "coboundary polynomial from per-prime point counts");

    m.def(
        "count_points",
        [](const std::string& poly, long q, const std::vector<std::string>& vars, int threads) {
            return to_py(count_complement(make(poly, vars), q, threads));
        },
        py::arg("poly"), py::arg("q"), py::arg("vars") = std::vector<std::string>{},
        py::arg("threads") = 0, "points of (Z/q)^l avoiding every hyperplane");

    m.def(
        "nongood_primes",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return longs(nongood_primes(make(poly, vars)));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "primes where two hyperplanes collapse");

    m.def(
        "k_lucky_excluded",
        [](const std::string& poly, int k, const std::vector<std::string>& vars,
           const std::string& order) {
            return longs(k_lucky_excluded(make(poly, vars), k, order_of(order)));
        },
        py::arg("poly"), py::arg("k"), py::arg("vars") = std::vector<std::string>{},
        py::arg("order") = "lex",
        "primes dividing a leading coefficient of some rank-k tuple ideal basis");

    m.def(
        "jacobian_excluded",
        [](const std::string& poly, const std::vector<std::string>& vars, bool include_q,
           const std::string& order) {
            return longs(jacobian_lucky_excluded(make(poly, vars), order_of(order), include_q));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        py::arg("include_q") = false, py::arg("order") = "lex",
        "excluded primes of the partial-derivative ideal");

    m.def(
        "rho0",
        [](const std::string& poly, const std::vector<std::string>& vars) {
            return to_py(rho_period(make(poly, vars)));
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "lcm of the largest invariant factors over all column subsets");

    m.def(
        "equivalent_mod",
        [](const std::string& poly, long p, const std::vector<std::string>& vars) {
            EquivalenceResult r = comb_equivalent_mod(make(poly, vars), p);
            py::list w;
            for (int i : r.witness) w.append(i);
            return py::make_tuple(r.equivalent, w);
        },
        py::arg("poly"), py::arg("p"), py::arg("vars") = std::vector<std::string>{},
        "(equivalent, witness subset) against the mod-p reduction");

    m.def(
        "groebner",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& vars,
           const std::string& order) {
            std::vector<std::string> names = vars.empty() ? infer_var_names(gens) : vars;
            TermOrder ord = order_of(order);
            std::vector<Poly> ps;
            for (const std::string& g : gens)
                for (Poly& f : parse_product(g, names, ord)) ps.push_back(std::move(f));
            StrongBasis b = strong_groebner(ps, ord);
            py::list basis;
            for (const Poly& g : b.generators) basis.append(poly_to_string(g, names));
            return py::make_tuple(basis, longs(lucky_excluded_primes(ps, ord)));
        },
        py::arg("gens"), py::arg("vars") = std::vector<std::string>{}, py::arg("order") = "lex",
        "(minimal strong basis, excluded primes) of the ideal over Z");
}
