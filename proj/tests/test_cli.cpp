#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <string>

#include "coneortho/json_io.hpp"

using namespace coneortho;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CONE_ORTHO_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "CONE_ORTHO_CLI must point at the built binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("basis command emits the expected polynomial") {
    auto r = run_cli("basis --family laguerre --kind V --d 1 --k 0 --n 1 --mu 1/2 --beta 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["family"] == "V");
    CHECK(j["n"] == 1);
    MVPoly p = mvpoly_from_json(j);
    CHECK(p == MVPoly::var_t(1) - MVPoly::constant(1, Rational(2)));
}

TEST_CASE("basis --all-k emits the full degree block") {
    auto r = run_cli("basis --family jacobi --kind S --d 2 --n 2 --mu 1 --beta 0 --gamma 1/2 --all-k");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() == 6);  // multi-indices with |k| <= 2 in d = 2
}

TEST_CASE("JSON round trip through the CLI") {
    auto r = run_cli("basis --family jacobi --kind U --d 2 --k 1,1 --n 3 --mu 1/2 --beta 1 --gamma 1/2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    ConeBasisElement e = cone_element_from_json(j);
    WeightSpec w = WeightSpec::jacobi(2, Rational(1, 2), Rational(1), Rational(1, 2));
    CHECK(e.poly == cone_U(MultiIndex{1, 1}, 3, w).poly);
    CHECK(to_json(e) == j);
}

TEST_CASE("pair command returns the exact rational") {
    auto r = run_cli(
        "pair --family laguerre --d 1 --mu 1/2 --beta 0 --kind V --k 0 --n 1 --kind2 V "
        "--k2 0 --n2 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(rational_from_json(j["value"]) == Rational(2));
}

TEST_CASE("moments command") {
    auto r = run_cli("moments --family laguerre --d 1 --mu 1/2 --beta 0 --a 2 --s 0");
    CHECK(r.exit_code == 0);
    CHECK(rational_from_json(json::parse(r.out)["value"]) == Rational(2));
}

TEST_CASE("table command: json and csv") {
    auto r = run_cli("table --family laguerre --d 1 --mu 1/2 --beta 0 --n-from 2 --n-to 2 --kmax 2");
    CHECK(r.exit_code == 0);
    json rows = json::parse(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rational_from_json(rows[0]["value"]) == Rational(12));
    CHECK(rows[0]["approx"] == "12.000000000000");

    auto c = run_cli(
        "table --family laguerre --d 1 --mu 1/2 --beta 0 --n-from 0 --n-to 1 --kmax 0 "
        "--format csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out.rfind("n,k,value,approx\r\n", 0) == 0);
    CHECK(c.out.find("0,0,1,1.000000000000") != std::string::npos);
}

TEST_CASE("byte-identical output for identical config") {
    std::string args =
        "basis --family jacobi --kind V --d 2 --k 2,1 --n 4 --mu 1 --beta 1 --gamma 1/2";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify command: passing suite exits 0") {
    auto r = run_cli("verify --suite bc-delta --d 2 --max-k 3");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep[0]["status"] == "pass");
    CHECK(rep[0]["checked"].get<int>() > 0);
}

TEST_CASE("verify respects --family and --n") {
    auto r = run_cli("verify --suite y-biortho --family jacobi --n 4");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep[0]["status"] == "pass");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("basis --kind Q --n 1").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
    CHECK(run_cli("basis --kind V --d 2 --k 1 --n 1 --mu 1/2 --beta 0").exit_code == 2);
    CHECK(run_cli("basis --kind Y --d 2 --k 1,0 --n 1 --mu 1/2 --beta 0").exit_code == 2);
    CHECK(run_cli("moments --a 2 --s 0 --mu 0.5").exit_code == 2);
}
