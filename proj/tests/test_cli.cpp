#include "stringy/run.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using namespace stringy;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"stringy"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "stringy_cli_test";
        std::filesystem::create_directories(path);
    }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

const char* a1_fan = "fan 2 2 1\n1 0\n1 2\n2 0 1\n";
const char* quintic_ef =
    R"({"num": [[0,0,1],[3,0,-1],[0,3,-1],[3,3,1],[1,1,1],[2,2,1],[1,2,-101],[2,1,-101]]})";
const char* quintic_mirror_ef =
    R"({"num": [[0,0,1],[3,0,-1],[0,3,-1],[3,3,1],[1,1,101],[2,2,101],[1,2,-1],[2,1,-1]]})";

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check-lemma prints the phi function twice and exits 0") {
    TempDir tmp;
    std::string fan = tmp.file("a1.fan", a1_fan);
    CliResult r = cli({"check-lemma", fan, "--type", "1,1", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "u*v + u^2*v^2\nu*v + u^2*v^2\n");
}

TEST_CASE("resolve prints the exceptional ray and its discrepancy") {
    TempDir tmp;
    std::string fan = tmp.file("a1.fan", a1_fan);
    CliResult r = cli({"resolve", fan});
    CHECK(r.code == 0);
    CHECK(r.out.find("exceptional 1 1 discrepancy 0") != std::string::npos);
    CHECK(r.out.find("fan 2 3 2") != std::string::npos);
}

TEST_CASE("check-mirror on the quintic pair") {
    TempDir tmp;
    std::string ev = tmp.file("quintic.ef", quintic_ef);
    std::string ew = tmp.file("quintic_mirror.ef", quintic_mirror_ef);
    CliResult r = cli({"check-mirror", "--ev", ev, "--ew", ew, "-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("est-mirror holds") != std::string::npos);

    CliResult rphi =
        cli({"check-mirror", "--ev", ev, "--ew", ew, "-n", "3", "--type", "2,1", "--seed", "1"});
    CHECK(rphi.code == 0);
    CHECK(rphi.out.find("phi-mirror holds") != std::string::npos);

    CliResult bad = cli({"check-mirror", "--ev", ev, "--ew", ev, "-n", "3"});
    CHECK(bad.code == 1);
}

TEST_CASE("estringy, epoly, phi and dual produce stable text") {
    TempDir tmp;
    std::string fan = tmp.file("a1.fan", a1_fan);
    CHECK(cli({"estringy", fan}).out == "t + t^2\n");
    CHECK(cli({"epoly", fan}).out == "t^2\n");
    CHECK(cli({"phi", fan, "--type", "1,1"}).out == "u*v + u^2*v^2\n");
    CHECK(cli({"phi", fan, "--type", "1,1", "--via-resolution"}).out == "u*v + u^2*v^2\n");

    std::string poly = tmp.file("tri.poly", "polytope 2 3\n1 0\n0 1\n-1 -1\n");
    CliResult dual = cli({"dual", poly});
    CHECK(dual.code == 0);
    CHECK(dual.out == "vertex -1 -1\nvertex -1 2\nvertex 2 -1\nreflexive true\n");
}

TEST_CASE("byte-identical output across repeated runs") {
    TempDir tmp;
    std::string fan = tmp.file("a1.fan", a1_fan);
    for (const char* cmd : {"estringy", "resolve"}) {
        CliResult first = cli({cmd, fan});
        CliResult second = cli({cmd, fan});
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
    }
    CliResult j1 = cli({"estringy", fan, "--json"});
    CliResult j2 = cli({"estringy", fan, "--json"});
    CHECK(j1.out == j2.out);
}

TEST_CASE("input errors exit with code 2") {
    TempDir tmp;
    CHECK(cli({"estringy", (tmp.path / "missing.fan").string()}).code == 2);
    std::string bad = tmp.file("bad.fan", "fan 2 1 1\n1 zebra\n1 0\n");
    CliResult r = cli({"estringy", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);

    std::string notqg =
        tmp.file("notqg.fan", "fan 3 4 1\n1 0 1\n0 1 1\n-1 0 1\n0 -1 2\n4 0 1 2 3\n");
    CliResult qg = cli({"estringy", notqg});
    CHECK(qg.code == 2);
    CHECK(qg.err.find("NotQGorenstein") != std::string::npos);

    // family type (0,0) is rejected whenever a family is required
    std::string fan = tmp.file("a1.fan", a1_fan);
    CHECK(cli({"phi", fan, "--type", "0,0"}).code == 2);
    CHECK(cli({"phi", fan}).code == 2); // --type is required
}

TEST_SUITE_END();
