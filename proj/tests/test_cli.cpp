#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "og10lat/cli.hpp"
#include "og10lat/json_io.hpp"

using og10lat::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::vector<std::string>(args), out, err);
    return Result{code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("lat info: golden table for A2") {
    Result r = cli({"lat", "info", "A2"});
    CHECK(r.code == 0);
    CHECK(r.out == "name        A2\n"
                   "rank        2\n"
                   "det         3\n"
                   "signature   (2,0)\n"
                   "parity      even\n"
                   "scale       1\n"
                   "disc group  [3]\n"
                   "gram\n"
                   "  [  2 -1 ]\n"
                   "  [ -1  2 ]\n");
}

TEST_CASE("lat info reads a lattice document") {
    std::string p = write_temp("og10lat_a2.json",
                               R"({"name":"my-a2","gram":[[2,-1],[-1,2]]})");
    Result r = cli({"lat", "info", p});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "my-a2"));
    CHECK(contains(r.out, "det         3"));
}

TEST_CASE("lat info --json round-trips through the document schema") {
    Result r = cli({"lat", "info", "U(3)", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["det"] == -9);
    CHECK(j["disc_group"] == json::array({3, 3}));
    std::string p = write_temp("og10lat_roundtrip.json", j.dump());
    Result r2 = cli({"lat", "info", p, "--json"});
    REQUIRE(r2.code == 0);
    CHECK(json::parse(r2.out)["gram"] == j["gram"]);
}

TEST_CASE("lat info on a degenerate lattice reports an undefined disc group") {
    std::string p = write_temp("og10lat_deg.json", R"({"gram":[[1,2],[2,4]]})");
    Result r = cli({"lat", "info", p});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "undefined (degenerate lattice)"));
}

TEST_CASE("exit codes: 1 for invalid input, 2 for mathematical rejection") {
    CHECK(cli({"lat", "info", "/nonexistent/file.json"}).code == 1);
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({"lat", "div", "U", "--vector", "0,0"}).code == 1);
    CHECK(cli({"lat", "div", "U", "--vector", "1,2,3"}).code == 1);
    CHECK(cli({"hassett", "check", "-5"}).code == 1);
    CHECK(cli({"og10", "picard-lpz", "13"}).code == 1);

    std::string deg = write_temp("og10lat_deg2.json", R"({"gram":[[1,2],[2,4]]})");
    Result r = cli({"lat", "div", deg, "--vector", "1,0"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "degenerate"));

    Result glue = cli({"lat", "glue", "U", "--glue", "1/2,0"});
    CHECK(glue.code == 2);
    CHECK(contains(glue.err, "non-integrally"));
}

TEST_CASE("lat div: divisibility of ebar in U(3)") {
    Result r = cli({"lat", "div", "U(3)", "--vector", "1,0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "divisibility  3"));
}

TEST_CASE("lat perp and lat saturate") {
    Result perp = cli({"lat", "perp", "A2", "--span", "1,0"});
    CHECK(perp.code == 0);
    CHECK(contains(perp.out, "rank        1"));

    // a full span has a trivial complement
    Result whole = cli({"lat", "perp", "A2", "--span", "1,0;0,1"});
    CHECK(whole.code == 0);
    CHECK(contains(whole.out, "rank        0"));

    Result sat = cli({"lat", "saturate", "U", "--span", "2,0"});
    CHECK(sat.code == 0);
    CHECK(contains(sat.out, "index  2"));

    CHECK(cli({"lat", "perp", "A2", "--span", "1,0;2,0"}).code == 1); // dependent
}

TEST_CASE("lat glue uses document glue vectors when no flag is given") {
    std::string p = write_temp(
        "og10lat_glue.json",
        R"({"gram":[[0,3,0],[3,0,0],[0,0,-42]],"glue":[["1/3","7/3","1/3"]]})");
    Result r = cli({"lat", "glue", p});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "index   3"));
    CHECK(contains(r.out, "det     42"));

    Result none = cli({"lat", "glue", "U"});
    CHECK(none.code == 1);
    CHECK(contains(none.err, "no glue vectors"));
}

TEST_CASE("hassett check: golden table at d = 14") {
    Result r = cli({"hassett", "check", "14"});
    CHECK(r.code == 0);
    CHECK(r.out == "d           14\n"
                   "admissible  yes\n"
                   "d mod 6     2\n"
                   "(**)        yes (n = 2)\n"
                   "(**')       yes\n"
                   "LSV         yes\n");
}

TEST_CASE("hassett list: table and json-lines output") {
    Result r = cli({"hassett", "list", "--max", "20"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "d  mod6  (**)    n  (**')   LSV"));
    CHECK(contains(r.out, "   14     2   yes    2    yes   yes"));

    Result j = cli({"hassett", "list", "--max", "50", "--json"});
    CHECK(j.code == 0);
    std::istringstream lines(j.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        json row = json::parse(line);
        CHECK(row["admissible"] == true);
        ++count;
    }
    CHECK(count == 15);
}

TEST_CASE("og10 gamma: default cubic marking") {
    Result r = cli({"og10", "gamma"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mukai       mukai-kuznetsov"));
    CHECK(contains(r.out, "signature   (3,21)"));
    CHECK(contains(r.out, "disc group  [3]"));
    CHECK(contains(r.out, "sigma^2     -6"));
    CHECK(contains(r.out, "div(sigma)  3"));
    CHECK(contains(r.out, "base index  2"));
}

TEST_CASE("og10 gamma --k3 --json") {
    Result r = cli({"og10", "gamma", "--k3", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["mukai"] == "mukai-k3");
    CHECK(j["rank"] == 24);
    CHECK(j["signature"] == json::array({3, 21, 0}));
    CHECK(j["sigma_square"] == -6);
    CHECK(j["sigma_divisibility"] == 3);
    CHECK(j["base_index"] == 2);
}

TEST_CASE("og10 gamma rejects a bad lambda0") {
    CHECK(cli({"og10", "gamma", "--lambda0",
               "2,2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0"}).code == 1);
}

TEST_CASE("og10 factoriality via the CLI") {
    Result r = cli({"og10", "factoriality", "--picard", "A2", "--lambda0", "1,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict         2-factorial"));
    CHECK(contains(r.out, "quotient order  2"));
    CHECK(contains(r.out, "witness         (1,0)"));

    std::string p = write_temp("og10lat_pic.json", R"({"gram":[[2,0],[0,-4]]})");
    Result lf = cli({"og10", "factoriality", "--picard", p, "--lambda0", "1,0"});
    CHECK(lf.code == 0);
    CHECK(contains(lf.out, "locally factorial"));
}

TEST_CASE("og10 picard-lpz 14: prints U + <-42> and the embedding") {
    Result r = cli({"og10", "picard-lpz", "14"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "normal form  U + <-42>"));
    CHECK(contains(r.out, "glued        yes"));
    CHECK(contains(r.out, "U embedding  yes"));
    CHECK(contains(r.out, "LSV          yes"));

    Result j = cli({"og10", "picard-lpz", "14", "--json"});
    REQUIRE(j.code == 0);
    json pj = json::parse(j.out);
    CHECK(pj["gram"] == json::parse("[[0,1,0],[1,0,0],[0,0,-42]]"));
    CHECK(pj["unimodular_u"] == "yes");
    CHECK(pj["lsv"] == true);

    // round-trip the gram through lat info
    std::string p = write_temp("og10lat_p14.json", json{{"gram", pj["gram"]}}.dump());
    Result info = cli({"lat", "info", p});
    CHECK(info.code == 0);
    CHECK(contains(info.out, "det         42"));
}

TEST_CASE("og10 picard-lpz 12: scale obstruction") {
    Result r = cli({"og10", "picard-lpz", "12"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "normal form  U(3) + <-36>"));
    CHECK(contains(r.out, "scale        3"));
    CHECK(contains(r.out, "U embedding  no (scale obstruction)"));
    CHECK(contains(r.out, "LSV          no"));
}

TEST_CASE("og10 birational 14: all three verdicts") {
    Result r = cli({"og10", "birational", "14"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "K3 moduli                        yes"));
    CHECK(contains(r.out, "twisted K3 (stratum-preserving)  yes"));
    CHECK(contains(r.out, "LSV                              yes"));
    CHECK(contains(r.out, "stratum-preserving birational maps only"));

    Result j = cli({"og10", "birational", "8", "--json"});
    REQUIRE(j.code == 0);
    json bj = json::parse(j.out);
    CHECK(bj["k3_moduli"] == false);
    CHECK(bj["twisted_k3_stratum"] == true);
    CHECK(bj["lsv"] == true);
}

TEST_CASE("nikulin embed via the CLI") {
    Result r = cli({"nikulin", "embed", "A2", "--target", "4,20"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict  exists"));

    std::string p = write_temp("og10lat_span2.json", R"({"gram":[[2]]})");
    Result u = cli({"nikulin", "embed", p, "--target", "1,1"});
    CHECK(u.code == 0);
    CHECK(contains(u.out, "unknown"));

    CHECK(cli({"nikulin", "embed", "A2", "--target", "4,0"}).code == 1);
}

TEST_CASE("paper replay exits 0 and reports every check") {
    Result r = cli({"paper", "replay"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "22/22 checks passed"));
    CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("--help exits 0") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"lat", "--help"}).code == 0);
}

TEST_CASE("lattice documents round-trip through to_json/parse") {
    using namespace og10lat;
    jsonio::LatticeDocument doc;
    doc.name = "pic-14";
    doc.gram = IntMatrix{{0, 3, 0}, {3, 0, 0}, {0, 0, -42}};
    doc.vectors["D"] = RowVec{0, 0, 1};
    RatVec glue(3);
    glue[0] = Rat(1, 3);
    glue[1] = Rat(7, 3);
    glue[2] = Rat(1, 3);
    doc.glue.push_back(glue);

    jsonio::LatticeDocument back = jsonio::parse_lattice_document(jsonio::to_json(doc));
    CHECK(back.name == doc.name);
    CHECK(back.gram == doc.gram);
    CHECK(back.vectors == doc.vectors);
    CHECK(back.glue == doc.glue);
}

TEST_CASE("lattice documents validate their fields") {
    using og10lat::jsonio::parse_lattice_document;
    using og10lat::precondition_error;
    CHECK_THROWS_AS(parse_lattice_document(json::parse(R"({"gram":[[0,1]]})")),
                    precondition_error); // not square
    CHECK_THROWS_AS(parse_lattice_document(json::parse(R"({"gram":[[0,2],[1,0]]})")),
                    precondition_error); // not symmetric
    CHECK_THROWS_AS(
        parse_lattice_document(json::parse(
            R"({"gram":[[2,0],[0,2]],"vectors":{"v":[1]}})")),
        precondition_error); // wrong vector length
    CHECK_THROWS_AS(
        parse_lattice_document(json::parse(
            R"({"gram":[[2,0],[0,2]],"glue":[["1/0","0"]]})")),
        precondition_error); // zero denominator
}
