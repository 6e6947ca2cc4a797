#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ccg/projective.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ccg::cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "ccg");
    std::ostringstream out, err;
    const int status = main_entry(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) { return std::filesystem::path(CCG_BINARY_DIR) / name; }

}  // namespace

TEST_CASE("build lambda json at p = 3") {
    const auto r = call({"build", "--p", "3", "--graph", "lambda", "--format", "json"});
    REQUIRE(r.status == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"] == 1471);
    CHECK(j["graph"] == "lambda");
    CHECK(call({"build", "--p", "3", "--format", "json-stats"}).out == r.out);
}

TEST_CASE("default build format is the edge list") {
    const auto r = call({"build", "--p", "2"});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out.rfind("# graph lambda\n# p 2\n# vertices 191\n", 0) == 0);
}

TEST_CASE("incidence prints T_3") {
    const auto r = call({"incidence", "--p", "3"});
    REQUIRE(r.status == kExitOk);
    std::ostringstream expected;
    const auto t = ccg::build_Tp(3);
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) expected << (j ? " " : "") << int(t(i, j));
        expected << '\n';
    }
    CHECK(r.out == expected.str());
    CHECK(call({"incidence", "--p", "2", "--format", "pbm"}).out.rfind("P1\n7 7\n", 0) == 0);
}

TEST_CASE("verify subcommands succeed on small primes") {
    for (const auto& graph : {"lambda", "gamma", "delta", "m2"}) {
        const auto r = call({"verify", "--p", "2", "--graph", graph, "--threads", "2"});
        INFO(graph, " ", r.err);
        CHECK(r.status == kExitOk);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["match"] == true);
        CHECK(r.err.find(": MATCH") != std::string::npos);
    }
}

TEST_CASE("stats prints the closed-form tables") {
    const auto r = call({"stats", "--p", "5"});
    REQUIRE(r.status == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mass"] == j["matrices"]);
    CHECK(j["table2"].size() == 8);
}

TEST_CASE("usage errors exit with 2") {
    auto r = call({"build", "--p", "4"});
    CHECK(r.status == kExitUsage);
    CHECK(r.err == "ccg: p = 4 is not prime\n");
    CHECK(call({"build", "--p", "1"}).status == kExitUsage);
    CHECK(call({"build"}).status == kExitUsage);
    CHECK(call({"frobnicate"}).status == kExitUsage);
    CHECK(call({"build", "--p", "2", "--format", "pbm"}).status == kExitUsage);
    CHECK(call({"build", "--p", "2", "--graph", "m2"}).status == kExitUsage);
    CHECK(call({"stats", "--p", "2", "--graph", "gamma"}).status == kExitUsage);
    CHECK(call({"build", "--p", "7", "--graph", "gamma"}).status == kExitUsage);
    CHECK(call({"build", "--p", "2", "--threads", "0"}).status == kExitUsage);
    r = call({"verify", "--p", "7", "--graph", "lambda"});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("refuses p = 7") != std::string::npos);
    CHECK(call({"verify", "--p", "5", "--graph", "gamma"}).status == kExitUsage);
    CHECK(call({"--help"}).status == kExitOk);
}

TEST_CASE("unwritable output exits with 3") {
    const auto r = call({"build", "--p", "2", "-o", "/nonexistent/dir/x"});
    CHECK(r.status == kExitIo);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("output files are byte-identical across runs and thread counts") {
    for (const auto& format : {"dot", "graphml", "edgelist", "csv", "json"}) {
        const auto a = scratch(std::string("det_a.") + format), b = scratch(std::string("det_b.") + format);
        REQUIRE(call({"build", "--p", "3", "--format", format, "-o", a.string(), "--threads", "1"}).status == kExitOk);
        REQUIRE(call({"build", "--p", "3", "--format", format, "-o", b.string(), "--threads", "4"}).status == kExitOk);
        const auto sa = slurp(a);
        CHECK_FALSE(sa.empty());
        CHECK(sa == slurp(b));
    }
    const auto g = scratch("det_gamma.txt");
    REQUIRE(call({"build", "--p", "2", "--graph", "gamma", "-o", g.string()}).status == kExitOk);
    CHECK(slurp(g) == call({"build", "--p", "2", "--graph", "gamma"}).out);
}

TEST_CASE("CCG_THREADS is validated") {
    ::setenv("CCG_THREADS", "abc", 1);
    auto r = call({"build", "--p", "2"});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("CCG_THREADS") != std::string::npos);
    CHECK(call({"build", "--p", "2", "--threads", "1"}).status == kExitOk);
    ::setenv("CCG_THREADS", "3", 1);
    CHECK(call({"verify", "--p", "2", "--graph", "lambda"}).status == kExitOk);
    ::unsetenv("CCG_THREADS");
}

TEST_CASE("run reports a configuration it cannot honour") {
    RunConfig c;
    c.command = Command::Incidence;
    c.p = 2;
    c.format = Format::Dot;
    std::ostringstream out, err;
    CHECK(run(c, out, err) == kExitUsage);
    CHECK_THROWS_AS(validate(c), UsageError);
    c.format = Format::Csv;
    CHECK(run(c, out, err) == kExitOk);
    CHECK(out.str().rfind("1,1,1,", 0) == 0);
}
