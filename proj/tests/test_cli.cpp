#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "gic/bounds.hpp"
#include "gic/channel.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = gic::cli::run(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

TEST_CASE("bounds text report carries the exact capacity") {
    const auto r = run_cli({"bounds", "--p-db", "10", "--h", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("low_interference_exact") != std::string::npos);
    const double cap = gic::tin_sum_rate(gic::make_symmetric(10.0, 0.25));
    CHECK(r.out.find(fmt10(cap)) != std::string::npos);
    CHECK(r.out.find("exact_capacity") != std::string::npos);
}

TEST_CASE("bounds json report matches the library values") {
    const auto r = run_cli({"bounds", "--p", "10", "--h", "0.5", "--format", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    const auto b = gic::all_bounds(gic::make_symmetric(10.0, 0.5));
    CHECK(j["tin_lower"].get<double>() == b.tin_lower);
    CHECK(j["tangent_upper"].get<double>() == *b.tangent_upper);
    CHECK(j["exact_capacity"].is_null());
    CHECK(j["regime"]["kind"] == "above_threshold");
}

TEST_CASE("bounds handles asymmetric parameters") {
    const auto r = run_cli(
        {"bounds", "--p1", "10", "--p2", "10", "--h12", "0.2", "--h21", "0.1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("low_interference_exact") != std::string::npos);
    const double cap = gic::tin_sum_rate(gic::make_params(10.0, 10.0, 0.2, 0.1));
    CHECK(r.out.find(fmt10(cap)) != std::string::npos);
}

TEST_CASE("sweep emits a deterministic 101-row CSV") {
    const std::vector<std::string> args{"sweep", "--p-db", "10",     "--h-from",
                                        "0",     "--h-to", "1",      "--h-step",
                                        "0.01"};
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    const auto lines = split_lines(r1.out);
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] ==
          "h,p,tin_lower,ortho_lower,onebit_upper,kramer_upper,tangent_upper,"
          "exact_capacity,regime");
    // in-regime row: empty tangent field, populated exact capacity
    CHECK(lines[1].find(",,") != std::string::npos);
    CHECK(lines[1].find("low_interference_exact") != std::string::npos);
    // out-of-regime row: tangent populated, exact capacity empty
    CHECK(lines.back().find("above_threshold") != std::string::npos);
}

TEST_CASE("sweep rows match all_bounds to full precision") {
    const auto r = run_cli({"sweep", "--p", "10", "--h-from", "0.25", "--h-to",
                            "0.65", "--h-step", "0.2"});
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);  // header + 3 rows
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream fields(lines[i]);
        std::string field;
        std::vector<std::string> cols;
        while (std::getline(fields, field, ',')) cols.push_back(field);
        REQUIRE(cols.size() == 9);
        const double h = std::stod(cols[0]);
        const auto b = gic::all_bounds(gic::make_symmetric(10.0, h));
        CHECK(std::stod(cols[2]) == b.tin_lower);
        if (b.tangent_upper) {
            CHECK(std::stod(cols[6]) == *b.tangent_upper);
        } else {
            CHECK(cols[6].empty());
        }
        if (b.exact_capacity) {
            CHECK(cols[7] == cols[2]);  // byte-identical to tin_lower
        } else {
            CHECK(cols[7].empty());
        }
    }
}

TEST_CASE("sweep json carries the same values as the CSV") {
    const auto csv = run_cli({"sweep", "--p", "10", "--h-from", "0", "--h-to",
                              "0.1", "--h-step", "0.05"});
    const auto js = run_cli({"sweep", "--p", "10", "--h-from", "0", "--h-to", "0.1",
                             "--h-step", "0.05", "--format", "json"});
    CHECK(js.code == 0);
    const json rows = json::parse(js.out);
    const auto lines = split_lines(csv.out);
    REQUIRE(rows.size() == 3);
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::istringstream fields(lines[i + 1]);
        std::string field;
        std::vector<std::string> cols;
        while (std::getline(fields, field, ',')) cols.push_back(field);
        CHECK(rows[i]["h"].get<double>() == std::stod(cols[0]));
        CHECK(rows[i]["tin_lower"].get<double>() == std::stod(cols[2]));
        CHECK(rows[i]["regime"].get<std::string>() == cols[8]);
    }
}

TEST_CASE("a step larger than the range yields a single row at h-from") {
    const auto r = run_cli({"sweep", "--p", "10", "--h-from", "0.3", "--h-to",
                            "0.4", "--h-step", "5"});
    CHECK(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(std::stod(lines[1].substr(0, lines[1].find(','))) == 0.3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"bounds", "--p", "10", "--p-db", "10", "--h", "1"}).code == 2);
    CHECK(run_cli({"bounds", "--p", "10"}).code == 2);
    CHECK(run_cli({"bounds", "--p", "10", "--h", "1", "--h12", "1"}).code == 2);
    CHECK(run_cli({"sweep", "--p", "10", "--h-from", "1", "--h-to", "0",
                   "--h-step", "0.1"})
              .code == 2);
    CHECK(run_cli({"sweep", "--p", "10", "--h-from", "0", "--h-to", "1",
                   "--h-step", "-0.1"})
              .code == 2);
    CHECK(run_cli({"sweep", "--p", "10"}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bounds", "--p", "10", "--h", "1", "--format", "yaml"}).code ==
          2);
    CHECK(run_cli({"bounds", "--p", "-4", "--h", "1"}).code == 1);  // domain error
}

TEST_CASE("help exits with code 0") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"sweep", "--help"}).code == 0);
}

TEST_CASE("genie report certifies inside the regime") {
    const auto r = run_cli({"genie", "--p", "10", "--h", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eta") != std::string::npos);
    CHECK(r.out.find("2.298097039") != std::string::npos);
    CHECK(r.out.find("0.7071067812") != std::string::npos);
    CHECK(r.out.find("genie_aided_rate") != std::string::npos);
}

TEST_CASE("genie report above the threshold falls back to the tangent") {
    const auto r = run_cli({"genie", "--p", "10", "--h", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no certificate") != std::string::npos);
    CHECK(r.out.find("tangent_upper") != std::string::npos);
}

TEST_CASE("genie report on the trivial channel") {
    const auto r = run_cli({"genie", "--p", "10", "--h", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no genie needed") != std::string::npos);
}

TEST_CASE("verify smoke run exits cleanly") {
    const auto r = run_cli({"verify", "--quick", "--trials", "100", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suites passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("strict verify flags the orthogonalization ordering and exits 1") {
    const auto r = run_cli(
        {"verify", "--quick", "--trials", "50", "--seed", "7", "--strict"});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] bound-ordering-strict") != std::string::npos);
    // the failing instances are named for reproduction
    CHECK(r.out.find("orthogonal rate exceeds an upper bound") != std::string::npos);
}

TEST_CASE("the installed binary behaves like the library entry point") {
    const std::string binary = GIC_CLI_PATH;
    const std::string tmp1 = "cli_test_sweep_1.csv";
    const std::string tmp2 = "cli_test_sweep_2.csv";
    const std::string cmd = binary +
                            " sweep --p-db 10 --h-from 0 --h-to 0.3 --h-step 0.1"
                            " --out ";
    REQUIRE(std::system((cmd + tmp1).c_str()) == 0);
    REQUIRE(std::system((cmd + tmp2).c_str()) == 0);
    std::ifstream f1(tmp1), f2(tmp2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(split_lines(s1.str()).size() == 5);
    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
}
