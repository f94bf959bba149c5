#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "arrmod/io.hpp"

using namespace arrmod;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(ARRMOD_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 256> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream f(path);
    f << body;
    return path;
}

} // namespace

TEST_CASE("json input accepts polynomial and matrix forms") {
    json jp = {{"vars", {"x", "y", "z"}}, {"polynomial", "x*y*(x+2*y+z)"}};
    Arrangement a = arrangement_from_json(jp);
    CHECK(a.size() == 3);
    CHECK(a.central());

    json jm = {{"vars", {"x", "y"}},
               {"matrix", {{1, 0}, {0, 1}, {1, 3}}},
               {"constants", {0, -1, 2}}};
    Arrangement b = arrangement_from_json(jm);
    CHECK(b.size() == 3);
    CHECK(!b.central());
    CHECK(b.constants() == std::vector<Int>{0, -1, 2});
    CHECK(poly_to_string(b.forms()[1], b.var_names()) == "y - 1");

    // huge entries arrive as strings; consecutive integers are coprime, so the
    // primitive normalization keeps the column as given
    json big = json::parse(R"({"vars": ["x", "y"],
                               "matrix": [["123456789012345678901234567890",
                                           "123456789012345678901234567891"]]})");
    Arrangement huge = arrangement_from_json(big);
    CHECK(huge.coefficients().at(0, 0) == Int("123456789012345678901234567890"));
    CHECK(huge.coefficients().at(1, 0) == Int("123456789012345678901234567891"));
}

TEST_CASE("json input rejects malformed documents") {
    CHECK_THROWS_AS(arrangement_from_json(json::array()), InputError);
    CHECK_THROWS_AS(arrangement_from_json({{"vars", json::array()}}), InputError);
    CHECK_THROWS_AS(arrangement_from_json({{"vars", {"x"}}}), InputError);
    CHECK_THROWS_AS(arrangement_from_json({{"vars", {"x", "y"}}, {"matrix", {{1}}}}),
                    InputError);
    CHECK_THROWS_AS(arrangement_from_json(
                        {{"vars", {"x"}}, {"matrix", {{1}}}, {"constants", {1, 2}}}),
                    InputError);
    CHECK_THROWS_AS(arrangement_from_json({{"vars", {"x"}}, {"matrix", {{1.5}}}}),
                    InputError);
    CHECK_THROWS_AS(arrangement_from_json_file("/nonexistent/input.json"), InputError);
}

TEST_CASE("integer serialization switches to strings when needed") {
    CHECK(int_to_json(Int(42)) == json(42));
    CHECK(int_to_json(Int(-7)) == json(-7));
    Int big = Int("910109090013191405265132134001111");
    CHECK(int_to_json(big) == json("910109090013191405265132134001111"));
    CHECK(int_from_json(int_to_json(big)) == big);
    CHECK(univariate_to_json({Int(-1), Int(3)}) == json::parse("[-1, 3]"));
}

TEST_CASE("variable inference from expression text") {
    CHECK(infer_var_names({"x*y*z"}) == std::vector<std::string>{"x", "y", "z"});
    CHECK(infer_var_names({"x*z"}) == std::vector<std::string>{"x", "y", "z"});
    CHECK(infer_var_names({"w"}) == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(infer_var_names({"x1+x3"}) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK_THROWS_AS(infer_var_names({"a+b"}), InputError);
    CHECK_THROWS_AS(infer_var_names({"x+x5"}), InputError);
}

TEST_CASE("cli golden lines") {
    CliResult r = run_cli("charpoly -e \"x*y*z\"");
    CHECK(r.code == 0);
    CHECK(r.out == "[-1, 3, -3, 1]\n");

    r = run_cli("gb -e \"x+y\" -e \"x+3*y+z\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("[\"x + y\", \"2*y + z\"]") == 0);
    CHECK(r.out.find("excluded primes: {2}") != std::string::npos);

    r = run_cli("count -e \"(x-y)*(x-z)*(y-z)\" --q 5");
    CHECK(r.code == 0);
    CHECK(r.out == "60\n");

    r = run_cli("tutte -e \"(x-y)*(x-z)*(y-z)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "x^2 + x + y\n");
}

TEST_CASE("cli json contracts") {
    CliResult r = run_cli("primes -e \"z*(4*x+z)*(2*x+y)*(6*x+y+3*z)*(8*x+2*y+5*z)\" --json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["nongood"] == json::parse("[2]"));
    CHECK(j["rho0"] == 16);
    CHECK(j["equivalent_iff_coprime_to"] == 16);
    CHECK(j["nonlucky"]["3"] == json::parse("[2]"));

    r = run_cli("equiv -e \"x*y*z*(x+y)*(x+2*y+z)\" --prime 2 --json");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["equivalent"] == false);
    CHECK(j["witness"] == json::parse("[0, 2, 4]"));

    r = run_cli("lattice -e \"x*y*z\" --json");
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["flats"].size() == 8);
    CHECK(j["flats"][0]["rank"] == 0);
    CHECK(j["flats"][0]["mobius"] == 1);

    r = run_cli("ffmethod -e \"x*y*z*(x+y)*(x+2*y+z)\" --primes 3,5,7,11 --json");
    CHECK(r.code == 0);
    json ff = json::parse(r.out);
    r = run_cli("coboundary -e \"x*y*z*(x+y)*(x+2*y+z)\" --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["coefficients"] == ff["coefficients"]);
}

TEST_CASE("cli reads files and honors exit codes") {
    std::string path = write_temp("arrmod_input.json",
                                  R"({"vars":["x","y"],"matrix":[[1,0],[0,1],[1,1]]})");
    CliResult r = run_cli("charpoly -f " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "[2, -3, 1]\n"); // three lines through the origin in the plane

    CHECK(run_cli("charpoly").code == 2);                       // missing input
    CHECK(run_cli("charpoly -e \"x^2\"").code == 2);            // parse error
    CHECK(run_cli("charpoly -e \"x*(3*x)\"").code == 1);        // duplicate hyperplane
    CHECK(run_cli("nosuchcommand").code == 2);                  // unknown subcommand
    CHECK(run_cli("charpoly -e \"x\" --order grlex").code == 2);
    CHECK(run_cli("ffmethod -e \"(x-y)*(x-z)*(y-z)\" --primes 2,3,5,7").code == 1);
    CHECK(run_cli("count -e \"x*y\" --q 0").code == 2);
}

TEST_CASE("cli check subcommand filters properties") {
    CliResult r = run_cli("check --only rho-golden --count 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  rho-golden") != std::string::npos);
    // a filter that matches nothing is an error, not a vacuous pass
    CHECK(run_cli("check --only no-such-property").code == 2);
}
