#include "arrmod/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

namespace arrmod {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw InputError("not an integer literal: \"" + s + "\"");
        }
    }
    throw InputError("expected an integer or a decimal string");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

json univariate_to_json(const std::vector<Int>& coeffs) {
    json arr = json::array();
    for (const Int& c : coeffs) arr.push_back(int_to_json(c));
    return arr;
}

json bivariate_to_json(const BivariatePoly& p) {
    json obj = json::object();
    for (const auto& [key, c] : p.terms())
        obj[std::to_string(key.first) + "," + std::to_string(key.second)] = int_to_json(c);
    return obj;
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        throw InputError("\"vars\" must be a non-empty array of names");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw InputError("\"vars\" entries must be strings");
        vars.push_back(v.get<std::string>());
    }
    const int l = static_cast<int>(vars.size());

    if (j.contains("polynomial")) {
        if (!j["polynomial"].is_string()) throw InputError("\"polynomial\" must be a string");
        return Arrangement::build(parse_product(j["polynomial"].get<std::string>(), vars), l,
                                  vars);
    }
    if (j.contains("matrix")) {
        const json& m = j["matrix"];
        if (!m.is_array() || m.empty()) throw InputError("\"matrix\" must be a non-empty array");
        const int n = static_cast<int>(m.size());
        IntMatrix cols(l, n);
        for (int i = 0; i < n; ++i) {
            if (!m[i].is_array() || static_cast<int>(m[i].size()) != l)
                throw InputError("matrix column " + std::to_string(i + 1) + " must have " +
                                 std::to_string(l) + " entries");
            for (int k = 0; k < l; ++k) cols.at(k, i) = int_from_json(m[i][k]);
        }
        std::vector<Int> consts;
        if (j.contains("constants")) {
            const json& c = j["constants"];
            if (!c.is_array() || static_cast<int>(c.size()) != n)
                throw InputError("\"constants\" must list one value per hyperplane");
            for (const auto& v : c) consts.push_back(int_from_json(v));
        }
        return Arrangement::from_columns(cols, consts, vars);
    }
    throw InputError("input needs either \"polynomial\" or \"matrix\"");
}

std::vector<std::string> infer_var_names(const std::vector<std::string>& sources) {
    std::set<std::string> seen;
    for (const std::string& s : sources) {
        std::size_t i = 0;
        while (i < s.size()) {
            if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
                std::size_t j = i;
                while (j < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                    ++j;
                seen.insert(s.substr(i, j - i));
                i = j;
            } else {
                ++i;
            }
        }
    }
    if (seen.empty()) throw InputError("no variables found; pass the list explicitly");
    static const std::vector<std::string> aliases = {"x", "y", "z", "w"};
    bool all_alias = true;
    int top = 0;
    for (const std::string& v : seen) {
        auto it = std::find(aliases.begin(), aliases.end(), v);
        if (it == aliases.end()) {
            all_alias = false;
            break;
        }
        top = std::max(top, static_cast<int>(it - aliases.begin()) + 1);
    }
    if (all_alias) return {aliases.begin(), aliases.begin() + top};
    int largest = 0;
    for (const std::string& v : seen) {
        bool indexed = v.size() >= 2 && v[0] == 'x';
        for (std::size_t k = 1; indexed && k < v.size(); ++k)
            indexed = std::isdigit(static_cast<unsigned char>(v[k]));
        if (!indexed) {
            largest = -1;
            break;
        }
        largest = std::max(largest, std::stoi(v.substr(1)));
    }
    if (largest <= 0)
        throw InputError("cannot infer the variable list; pass it explicitly");
    std::vector<std::string> out;
    for (int k = 1; k <= largest; ++k) out.push_back("x" + std::to_string(k));
    return out;
}

Arrangement arrangement_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return arrangement_from_json(j);
}

} // namespace arrmod
