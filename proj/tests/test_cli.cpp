#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "finsym/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = finsym::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::ofstream f(name);
    f << content;
    return name;
}

}  // namespace

TEST_CASE("char golden values") {
    auto r = run_cli({"char", "--rho", "[2,1]", "--nu", "[3]"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1\n");

    r = run_cli({"char", "--rho", "[2,1]", "--nu", "[3]", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1\n");
}

TEST_CASE("unipotent-table csv golden") {
    auto r = run_cli({"unipotent-table", "--case", "gl-sp", "--n", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "rho,value\n"
          "\"[4]\",1\n"
          "\"[3,1]\",0\n"
          "\"[2,2]\",1\n"
          "\"[2,1,1]\",0\n"
          "\"[1,1,1,1]\",0\n");
}

TEST_CASE("unipotent-table json") {
    auto r = run_cli({"unipotent-table", "--case", "u-u4", "--n", "4"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("n") == 4);
    bool found = false;
    for (const auto& row : j.at("rows"))
        if (row.at("rho") == "[2,2]") {
            CHECK(row.at("value") == 3);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("verify sweep exits clean") {
    auto r = run_cli({"verify", "--identity", "ff-inv", "--max-size", "4"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("ok") == true);
    CHECK(j.at("failures").empty());
    CHECK(j.at("checked").get<long long>() > 0);
    /* progress goes to the error stream, keeping stdout pure JSON */
    CHECK(r.err.find("ff-inv") != std::string::npos);
}

TEST_CASE("involutions queries") {
    auto r = run_cli({"involutions", "--nu", "[1,1]", "--filter", "ff"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("count") == 1);

    r = run_cli({"involutions", "--nu", "[1,1]", "--family", "plus", "--signature", "2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("count") == 1);

    r = run_cli({"involutions", "--nu", "[1]", "--weight", "neg2-l1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("weighted_sum") == -2);
}

TEST_CASE("tableaux queries") {
    auto r = run_cli({"tableaux", "--mu", "[2,1]"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("count") == 4);

    r = run_cli({"tableaux", "--mu", "[2,2]", "--signature", "0"});
    CHECK(json::parse(r.out).at("count") == 3);

    r = run_cli({"tableaux", "--mu", "[2,2]", "--fixed-by", "phipsi"});
    CHECK(json::parse(r.out).at("count") == 3);

    r = run_cli({"tableaux", "--mu", "[2,2]", "--fixed-by", "psi"});
    CHECK(json::parse(r.out).at("count") == 1);
}

TEST_CASE("orbits query") {
    auto r = run_cli({"orbits", "--q", "3", "--max-level", "1"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("twist") == "split");
    REQUIRE(j.at("orbits").size() == 2);
    CHECK(j.at("orbits")[0].at("tag") == "One");
    CHECK(j.at("orbits")[1].at("tag") == "MinusOne");
}

TEST_CASE("mult and crosscheck from a JSON file") {
    auto path = write_temp("cli_mult_input.json",
                           R"({"orbits":[{"tag":"One","m":1,"d":1}],)"
                           R"("assignments":{"0":[2,2]},"n":4})");
    auto r = run_cli({"mult", "--case", "gl-sp", "--input", path});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("multiplicity") == 1);

    auto path2 = write_temp("cli_cross_input.json",
                            R"({"orbits":[{"tag":"One","m":1,"d":1}],)"
                            R"("assignments":{"0":[1,1]}})");
    r = run_cli({"crosscheck", "--case", "gl-sp", "--input", path2});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("equal") == true);
    CHECK(j.at("involution_route") == j.at("character_route"));

    auto path3 = write_temp("cli_so_input.json",
                            R"({"q":3,"max_level":1,)"
                            R"("assignments":{"0":[1]},"so":true})");
    r = run_cli({"mult", "--case", "gl-o", "--input", path3});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("multiplicity") == 1);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"char", "--rho", "[2,1]"}).code == 2); /* missing --nu */
    CHECK(run_cli({"mult", "--case", "gl-sp", "--input", "missing.json"}).code == 2);
    CHECK(run_cli({"char", "--rho", "[2,1]", "--nu", "[4]"}).code == 2); /* size mismatch */
    CHECK(run_cli({"--help"}).code == 0);
}
