#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "algeo/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string &args) {
    const char *cli = std::getenv("ALGEO_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

bool cli_available() { return std::getenv("ALGEO_CLI") != nullptr; }

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path);
    f << text;
}

} // namespace

TEST_CASE("verify on a builtin passes with exit code 0") {
    if (!cli_available())
        return;
    RunResult r = run("verify m2q --trials 8 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"seed\": 0") != std::string::npos);
    CHECK(r.out.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("json reports are byte-identical across runs") {
    if (!cli_available())
        return;
    std::string cmd = "report qz3 --trials 4 --seed 42 --format json";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("markdown report has one section per suite") {
    if (!cli_available())
        return;
    RunResult r = run("report sl2 --trials 4");
    CHECK(r.exit_code == 0);
    for (const char *section :
         {"## graded-calculus", "## quasi-complex", "## quasi-representation",
          "## function-algebra", "## coherence", "## forms-vector-fields",
          "## forms-functions"})
        CHECK(r.out.find(section) != std::string::npos);
}

TEST_CASE("unknown inputs exit with the usage error code") {
    if (!cli_available())
        return;
    CHECK(run("verify no-such-algebra").exit_code == 2);
    CHECK(run("nonsense m2q").exit_code == 2);
}

TEST_CASE("file ingestion validates the field and the bracket") {
    if (!cli_available())
        return;
    write_file("/tmp/algeo_f3.json", R"({
      "name": "bad-field", "field": {"kind": "prime", "modulus": 3},
      "dimension": 1, "mu": []
    })");
    CHECK(run("verify /tmp/algeo_f3.json").exit_code == 2);

    write_file("/tmp/algeo_badbracket.json", R"({
      "name": "bad-bracket", "field": {"kind": "rational"},
      "dimension": 2, "mu": [],
      "bracket": [{"i":0,"j":0,"k":1,"c":"1"}]
    })");
    CHECK(run("verify /tmp/algeo_badbracket.json").exit_code == 2);

    write_file("/tmp/algeo_ok.json", R"({
      "name": "dual-numbers", "field": {"kind": "rational"},
      "dimension": 2, "basis": ["one", "eps"],
      "mu": [{"i":0,"j":0,"k":0,"c":"1"}, {"i":0,"j":1,"k":1,"c":"1"},
             {"i":1,"j":0,"k":1,"c":"1"}]
    })");
    RunResult ok = run("functions /tmp/algeo_ok.json --format json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("dim=2") != std::string::npos);
}

TEST_CASE("coherence of the commutative group algebra") {
    if (!cli_available())
        return;
    RunResult r = run("coherence qz3 --max-order 4 --max-degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order=2") != std::string::npos);
}

TEST_CASE("parse errors name a position") {
    algeo::AlgebraPtr alg;
    CHECK_THROWS_WITH_AS(alg = algeo::parse_algebra("{ not json"),
                         doctest::Contains("byte"), algeo::ParseError);
    CHECK_THROWS_AS(alg = algeo::parse_algebra("[1,2]"), algeo::ParseError);
}

TEST_CASE("builtin names resolve without files") {
    algeo::AlgebraPtr alg = algeo::load_algebra("m2q");
    CHECK(alg->dim() == 4);
    CHECK(algeo::input_digest(alg).size() == 16);
    CHECK(algeo::input_digest(alg) == algeo::input_digest(algeo::load_algebra("m2q")));
}
