// Copyright 2026 The pntlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "config.hpp"
#include "report.hpp"

using namespace pntlab;
using namespace pntlab::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

fs::path temp_path(const std::string& stem) {
    std::random_device rd;
    return fs::temp_directory_path() / (stem + "-" + std::to_string(rd()));
}

}  // namespace

TEST_CASE("threshold parsing accepts scientific notation") {
    CHECK(parse_threshold("1000000") == 1'000'000);
    CHECK(parse_threshold("1e6") == 1'000'000);
    CHECK(parse_threshold("2.5e3") == 2500);
    CHECK(parse_threshold("18446744073709551615") == ~u64{0});
    CHECK_THROWS_AS(parse_threshold("-5"), UsageError);
    CHECK_THROWS_AS(parse_threshold("abc"), UsageError);
    CHECK(parse_threshold_list("1e3,1e4,100") == std::vector<u64>{1000, 10000, 100});
    CHECK(parse_grid("1e2:1e4:1") == std::vector<u64>{100, 1000, 10000});
    CHECK(parse_grid("5,7") == std::vector<u64>{5, 7});
}

TEST_CASE("class parsing reports the gcd") {
    CHECK(parse_class(4, 1).phi() == 2);
    try {
        (void)parse_class(12, 8);
        FAIL("expected UsageError");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("gcd(a, q) = 4") != std::string::npos);
    }
}

TEST_CASE("experiment config round-trips through JSON") {
    ExperimentConfig cfg;
    cfg.command = "scan";
    cfg.x = {10, 1'000'000};
    cfg.q = 12;
    cfg.a = 5;
    cfg.grid = {100, 1000};
    cfg.B = 4.25;
    cfg.epsilon = 0.1;
    cfg.checkpoints = {1000, 10000};
    cfg.series = "mulog";
    cfg.cache = "/tmp/c";
    cfg.format = "json";
    cfg.threads = 3;
    cfg.partial_summation = true;
    CHECK(config_from_json(to_json(cfg)) == cfg);
    CHECK(config_from_json(nlohmann::ordered_json::parse(to_json(cfg).dump())) == cfg);
}

TEST_CASE("report formatting") {
    CHECK(report::format_double(0.1) == "0.1");
    CHECK(report::format_double(8.841592846803180) == "8.84159284680318");
    CHECK(report::format_cell(report::Cell{i64{-3}}) == "-3");
    CHECK(report::format_cell(report::Cell{true}) == "true");
    report::Table t{{"a", "b"}, {}};
    t.add_row({u64{1}, 2.5});
    CHECK_THROWS(t.add_row({u64{1}}));
    std::ostringstream csv;
    report::write_csv(csv, t);
    CHECK(csv.str() == "a,b\n1,2.5\n");
    std::ostringstream js;
    report::write_json(js, t, nlohmann::ordered_json::object());
    const auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["version"] == 1);
    CHECK(parsed["rows"][0]["b"] == 2.5);
}

TEST_CASE("psi subcommand") {
    const auto r = invoke({"psi", "--x", "20,1e6", "--q", "3", "--a", "1"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "x,q,a,phi_q,psi,theta,pi,main,residual");
    CHECK(ls[1].rfind("20,3,1,2,8.84159284680318,", 0) == 0);
    CHECK(ls[2].rfind("1000000,3,1,2,", 0) == 0);
}

TEST_CASE("json output has config, rows and version") {
    const auto r = invoke({"psi", "--x", "100", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["version"] == 1);
    CHECK(j["config"]["command"] == "psi");
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["pi"] == 25);
    CHECK(j["rows"][0].contains("residual"));
}

TEST_CASE("identities subcommand summary") {
    const auto r = invoke({"identities", "--max-n", "100000"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).at(0) == "checked 100000, max |gap| < 1e-9");
}

TEST_CASE("mertens subcommand") {
    const auto r = invoke({"mertens", "--checkpoints", "1e3,1e4,1e5", "--series", "mulog"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "y,s_mulog");
    for (int i = 1; i <= 3; ++i) {
        const double v = std::stod(ls[i].substr(ls[i].find(',') + 1));
        CHECK(std::abs(v + 1) < 0.05);
    }
    const auto both = invoke({"mertens", "--checkpoints", "10"});
    REQUIRE(both.code == 0);
    CHECK(lines(both.out).at(0) == "y,mertens,s_mu,s_mulog");
    CHECK(lines(both.out).at(1).rfind("10,-1,", 0) == 0);
}

TEST_CASE("other subcommands produce their fixed headers") {
    struct Case {
        std::vector<std::string> args;
        std::string header;
    };
    const Case cases[] = {
        {{"pi", "--x", "100", "--q", "4", "--a", "1"}, "x,q,a,pi"},
        {{"pi", "--x", "1e4", "--partial-summation"},
         "x,q,a,pi,pi_theta_route,pi_psi_route,route_gap,quadrature_error,grid_points,converged"},
        {{"decompose", "--x", "20", "--q", "3", "--a", "1"},
         "x,q,a,psi_exact,s1_total,s2_total,m_paper,e_paper,identity_gap,grouping_gap,main_asymptotic"},
        {{"mobius-scan", "--q", "3", "--a", "1", "--grid", "1,10"}, "x,q,a,sum,log_norm,sqrt_norm,q_admissible"},
        {{"scan", "--q", "3", "--a", "1", "--grid", "1e4:1e5:2"},
         "x,psi,main,residual,sw_norm,rh_norm,mont_norm,q_admissible"},
        {{"fit", "--series", "mulog", "--checkpoints", "1e3,1e4,1e5"}, "y,value,gap,fitted_b,log_c,saturated"},
    };
    for (const auto& c : cases) {
        const auto r = invoke(c.args);
        INFO(c.args[0]);
        REQUIRE(r.code == 0);
        CHECK(lines(r.out).at(0) == c.header);
    }
    const auto pi = invoke({"pi", "--x", "100", "--q", "4", "--a", "1"});
    CHECK(lines(pi.out).at(1) == "100,4,1,11");
    const auto mob = invoke({"mobius-scan", "--q", "3", "--a", "2", "--grid", "10"});
    CHECK(lines(mob.out).at(1).rfind("10,3,2,-2,", 0) == 0);
}

TEST_CASE("scan warns on inadmissible moduli") {
    const auto r = invoke({"scan", "--q", "97", "--a", "1", "--grid", "100,1000"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("fit reads a CSV series") {
    const auto path = temp_path("pntlab-series");
    {
        std::ofstream f(path);
        f.precision(17);
        f << "y,value\n";
        for (double y = 1e3; y <= 1e8; y *= 10) f << y << ',' << 1 / std::pow(std::log(y), 2) << '\n';
    }
    const auto r = invoke({"fit", "--input", path.string(), "--limit", "0"});
    fs::remove(path);
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    const auto last = ls[1];
    // fitted_b is the 4th column
    std::vector<std::string> cols;
    std::istringstream in(last);
    for (std::string c; std::getline(in, c, ',');) cols.push_back(c);
    CHECK(std::stod(cols.at(3)) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(invoke({"fit", "--input", "/nonexistent/series.csv", "--limit", "0"}).code == 2);
    CHECK(invoke({"fit", "--input", "x.csv"}).code == 2);
}

TEST_CASE("sieve populates a cache directory") {
    const auto dir = temp_path("pntlab-cli-cache");
    const auto r = invoke({"sieve", "--lo", "1", "--hi", "1e5", "--segment", "30000", "--cache", dir.string()});
    REQUIRE(r.code == 0);
    std::size_t bins = 0;
    for (const auto& e : fs::directory_iterator(dir)) bins += e.path().extension() == ".bin";
    CHECK(bins == 4);
    const auto cached = invoke({"mertens", "--checkpoints", "99999", "--cache", dir.string()});
    const auto fresh = invoke({"mertens", "--checkpoints", "99999"});
    CHECK(cached.out == fresh.out);
    fs::remove_all(dir);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"psi"}).code == 2);
    CHECK(invoke({"psi", "--x", "10", "--bogus"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    const auto nc = invoke({"psi", "--x", "100", "--q", "4", "--a", "2"});
    CHECK(nc.code == 2);
    CHECK(nc.err.find("gcd(a, q) = 2") != std::string::npos);
    CHECK(invoke({"psi", "--x", "1e13"}).code == 2);
    CHECK(invoke({"mertens", "--checkpoints", "100,10"}).code != 0);
    CHECK(invoke({"psi", "--x", "10", "--out", "/nonexistent-dir/out.csv"}).code == 1);
    CHECK(invoke({"--version"}).code == 0);
}

TEST_CASE("repeated runs are byte-identical, across thread counts") {
    const std::vector<std::string> base = {"scan", "--q", "4", "--a", "3", "--grid", "1e3:1e6:3", "--format", "json"};
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = invoke(one), b = invoke(one), c = invoke(four);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    // the config block records the thread count; rows must match exactly
    CHECK(nlohmann::json::parse(a.out)["rows"] == nlohmann::json::parse(c.out)["rows"]);

    const auto path = temp_path("pntlab-out");
    REQUIRE(invoke({"psi", "--x", "1e5", "--out", path.string()}).code == 0);
    std::ifstream f(path);
    const std::string written{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    fs::remove(path);
    CHECK(written == invoke({"psi", "--x", "1e5"}).out);
}
