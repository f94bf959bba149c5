#pragma once

#include <json.hpp>

#include "arrmod/arrangement.hpp"
#include "arrmod/enumpoly.hpp"

namespace arrmod {

using nlohmann::json;

// input schema: { "vars": [names], "polynomial": "factor product" }
// or            { "vars": [names], "matrix": [[col_1],...], "constants": [c_1,...] }
// where each matrix entry is a column (one hyperplane's coefficients)
Arrangement arrangement_from_json(const json& j);
Arrangement arrangement_from_json_file(const std::string& path);

json int_to_json(const Int& v);       // int64 when it fits, decimal string otherwise
Int int_from_json(const json& j);

json univariate_to_json(const std::vector<Int>& coeffs); // lowest degree first
json bivariate_to_json(const BivariatePoly& p);          // {"i,j": coeff}

// variable list implied by the identifiers in the given sources: either the
// aliases x,y,z,w (dimension = highest alias used) or x1..xk (dimension =
// largest index); anything else demands an explicit list
std::vector<std::string> infer_var_names(const std::vector<std::string>& sources);

} // namespace arrmod
