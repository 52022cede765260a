#include "doctest.h"

#include "subthresh/cli.hpp"
#include "subthresh/json_out.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace subthresh;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("subthresh_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
        write("triangle.txt", "0 1\n1 2\n2 0\n");
        write("c4.txt", "# 4-cycle\n0 1\n1 2\n2 3\n3 0\n");
        write("k2.txt", "0 1\n");
        write("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
        write("loop.txt", "0 1\n1 1\n");
        write("c30.txt", [] {
            std::string s;
            for (int i = 0; i < 30; ++i) s += std::to_string(i) + " " + std::to_string((i + 1) % 30) + "\n";
            return s;
        }());
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
    fs::path dir_;
};

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("thresholds command reports p_tilde_E for the triangle") {
    Workspace ws;
    const auto r = cli({"thresholds", "--graph", ws.path("triangle.txt"), "--n", "5"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["p_tilde_E"].get<double>() == doctest::Approx(0.368403).epsilon(1e-6));
    CHECK(j["n"] == 5);
    CHECK(j["witnesses"].size() == 1);
    const std::vector<std::string> keys = {"n", "pattern", "p_E", "p_tilde_E", "log_p_E", "log_p_tilde_E", "witnesses"};
    std::size_t i = 0;
    for (auto it = j.begin(); i < keys.size(); ++it, ++i) CHECK(it.key() == keys[i]);
}

TEST_CASE("census command lists the classes of C4") {
    Workspace ws;
    const auto r = cli({"census", "--graph", ws.path("c4.txt")});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 5);
    long total = 0;
    for (const auto& c : j) {
        total += std::stol(c["multiplicity"].get<std::string>());
        CHECK(c.contains("canonical_key"));
        CHECK(c.contains("aut_count"));
        CHECK(c["representative_edge_list"].size() == c["edge_count"].get<std::size_t>());
    }
    CHECK(total == 15);
    const auto connected = cli({"census", "--graph", ws.path("c4.txt"), "--connected-only"});
    CHECK(Json::parse(connected.out).size() == 4);
}

TEST_CASE("exact estimate for a single edge") {
    Workspace ws;
    const auto r = cli({"estimate-pc", "--graph", ws.path("k2.txt"), "--n", "2", "--exact"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["p_hat"].get<double>() == 0.5);
    CHECK(j["method"] == "exact");
}

TEST_CASE("spread command certifies and samples") {
    Workspace ws;
    const auto r = cli({"spread", "--graph", ws.path("triangle.txt"), "--n", "5", "--empirical", "--samples", "4000"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["r_star"].get<double>() == doctest::Approx(std::cbrt(10.0)));
    CHECK(j["empirical"].size() == 3);
}

TEST_CASE("family command writes CSV and JSON") {
    const auto csv = cli({"--format", "csv", "family", "--kind", "cycle", "--param", "0", "--n-list", "8,16,32,64"});
    REQUIRE(csv.code == kExitOk);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
    const auto json = cli({"family", "--kind", "cycle", "--n-list", "8,16"});
    REQUIRE(json.code == kExitOk);
    CHECK(Json::parse(json.out).size() == 2);
    CHECK(cli({"family", "--kind", "cycle", "--n-list", "8,x"}).code == kExitInput);
}

TEST_CASE("identical configurations give identical bytes") {
    Workspace ws;
    const std::vector<std::string> base = {"estimate-pc", "--graph", ws.path("c6.txt"), "--n", "8", "--samples", "500"};
    auto with = [&](std::vector<std::string> front) {
        front.insert(front.end(), base.begin(), base.end());
        return cli(front).out;
    };
    const std::string a = with({"--seed", "5", "--threads", "1"});
    const std::string b = with({"--seed", "5", "--threads", "1"});
    const std::string c = with({"--seed", "5", "--threads", "4"});
    const std::string d = with({"--seed", "6", "--threads", "1"});
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != d);
    CHECK(Json::parse(a)["seed"] == 5);
    const auto family_a = cli({"--threads", "1", "family", "--kind", "matching", "--n-list", "8", "--with-pc", "--samples", "300"});
    const auto family_b = cli({"--threads", "3", "family", "--kind", "matching", "--n-list", "8", "--with-pc", "--samples", "300"});
    CHECK(family_a.out == family_b.out);
}

TEST_CASE("global flags may follow the subcommand") {
    Workspace ws;
    const auto r = cli({"thresholds", "--graph", ws.path("triangle.txt"), "--n", "5", "--format", "text"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("p_tilde_E 0.36840") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1 and a parsable first line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bogus"}, {}, {"thresholds", "--graph", "x", "--n", "5", "--frobnicate"}, {"census"}}) {
        const auto r = cli(args);
        CHECK(r.code == kExitInput);
        CHECK(first_line(r.err).rfind("ERROR input_error: ", 0) == 0);
        CHECK(r.err.find("Usage") != std::string::npos);
    }
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("error kinds map to exit codes") {
    Workspace ws;
    const auto loop = cli({"census", "--graph", ws.path("loop.txt")});
    CHECK(loop.code == kExitInput);
    CHECK(first_line(loop.err).rfind("ERROR input_error: ", 0) == 0);
    CHECK(loop.err.find("line 2") != std::string::npos);

    const auto missing = cli({"census", "--graph", ws.path("nope.txt")});
    CHECK(missing.code == kExitInput);

    const auto big = cli({"census", "--graph", ws.path("c30.txt")});
    CHECK(big.code == kExitCapacity);
    CHECK(first_line(big.err).rfind("ERROR capacity_error: ", 0) == 0);

    const auto exact = cli({"estimate-pc", "--graph", ws.path("triangle.txt"), "--n", "9", "--exact"});
    CHECK(exact.code == kExitCapacity);

    const auto infeasible = cli({"thresholds", "--graph", ws.path("triangle.txt"), "--n", "2"});
    CHECK(infeasible.code == kExitInput);
    CHECK(first_line(infeasible.err).rfind("ERROR infeasible_error: ", 0) == 0);

    const auto oracle = cli({"estimate-pc", "--graph", ws.path("triangle.txt"), "--n", "5", "--oracle", "hamiltonian"});
    CHECK(oracle.code == kExitInput);

    const auto csv = cli({"--format", "csv", "thresholds", "--graph", ws.path("triangle.txt"), "--n", "5"});
    CHECK(csv.code == kExitInput);
    for (const auto& r : {loop, missing, big, exact, infeasible, oracle, csv}) {
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        CHECK(r.out.empty());
    }
}

TEST_CASE("output flag writes the result to a file") {
    Workspace ws;
    const std::string target = ws.path("out.json");
    const auto r = cli({"--output", target, "thresholds", "--graph", ws.path("triangle.txt"), "--n", "5"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(target);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == cli({"thresholds", "--graph", ws.path("triangle.txt"), "--n", "5"}).out);
}

TEST_CASE("verify prints one line per criterion and signals failures") {
    const auto ok = cli({"verify", "--suite", "1,4"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("PASS  criterion  1") != std::string::npos);
    CHECK(ok.out.find("PASS  criterion  4") != std::string::npos);

    const auto json = cli({"--format", "json", "verify", "--suite", "4"});
    CHECK(json.code == kExitOk);
    CHECK(Json::parse(json.out)[0]["pass"] == true);

    const auto missing_golden = cli({"verify", "--suite", "7", "--golden-dir", "/nonexistent/golden"});
    CHECK(missing_golden.code == kExitAcceptance);
    CHECK(missing_golden.out.find("FAIL  criterion  7") != std::string::npos);

    CHECK(cli({"verify", "--suite", "12"}).code == kExitInput);
}
