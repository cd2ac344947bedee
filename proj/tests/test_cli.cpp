#include "doctest.h"

#include <sstream>

#include "ordinals/cli.hpp"
#include "ordinals/parser.hpp"
#include "ordinals/selftest.hpp"

using namespace ordinals;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval and the infinite operations") {
    CHECK(run_cli({"eval", "(w+1)@(w+1)"}).out == "w^(2) + w*2 + 1\n");
    CHECK(run_cli({"infprod", "[; 2]"}).out == "w\n");
    CHECK(run_cli({"infprod", "[; 2]"}).code == 0);
    CHECK(run_cli({"infsum", "[; w, 1]"}).out == "w^(2)\n");
    CHECK(run_cli({"oprod", "[; w]"}).out == "w^(w)\n");
    CHECK(run_cli({"osum", "[1 ; w]"}).out == "w^(2)\n");
    CHECK(run_cli({"classify", "[w ; 1]"}).out == "EventuallyOne(1)\n");
    CHECK(run_cli({"threshold", "[w^(w^2), w^(w^3) ; w]"}).out == "2\n");
}

TEST_CASE("rearrangement verbs print sorted deduplicated sets") {
    CHECK(run_cli({"rearrange-sum", "[w^2, w ; 1]"}).out == "w^(2) + w\nw^(2) + w*2\n");
    CHECK(run_cli({"rearrange-prod", "[0, w ; 2]"}).out == "0\n");
    CHECK(run_cli({"rearrange-finite-sum", "w, 1"}).out == "w\nw + 1\n");
    CHECK(run_cli({"rearrange-finite-prod", "w+1, w"}).out == "w^(2)\nw^(2) + w\n");
}

TEST_CASE("rank verbs") {
    CHECK(run_cli({"rank", "[; w]", "{0:3, 2:5}"}).out == "w^(2)*5 + 3\n");
    CHECK(run_cli({"unrank", "[; w]", "w^(2)*5 + 3"}).out == "{0:3, 2:5}\n");
    CHECK(run_cli({"unrank", "[; w]", "0"}).out == "{}\n");
    CHECK(run_cli({"fcrank", "[; 2]", "0", "{3:1}"}).out == "8\n");
    CHECK(run_cli({"nprank", "w+1", "w+1", "w", "w"}).out == "w^(2) + w*2\n");
}

TEST_CASE("exit codes follow the 0/1/2 contract") {
    Run syntax = run_cli({"eval", "w^"});
    CHECK(syntax.code == 1);
    CHECK(syntax.out.empty());
    CHECK(syntax.err.find("position 2") != std::string::npos);

    Run domain = run_cli({"eval", "(w+1)^2"});
    CHECK(domain.code == 2);
    CHECK(domain.err.find("unsupported exponentiation") != std::string::npos);

    Run degree_zero = run_cli({"infprod", "[; w"});
    CHECK(degree_zero.code == 1);

    Run zero_factor = run_cli({"rank", "[; 0]", "{}"});
    CHECK(zero_factor.code == 2);
    CHECK(zero_factor.err.find("domain error") != std::string::npos);

    Run cap = run_cli({"rearrange-finite-sum", "1,1,1,1,1,1,1,1,1"});
    CHECK(cap.code == 2);

    Run unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);

    Run arity = run_cli({"eval"});
    CHECK(arity.code == 2);

    Run nothing = run_cli({});
    CHECK(nothing.code == 2);
}

TEST_CASE("flags") {
    CHECK(run_cli({"rearrange-finite-sum", "1,1,1,1,1,1,1,1,1", "--max-specials", "9"}).code
          == 0);
    CHECK(run_cli({"eval", "w", "--seed"}).code == 2);
}

TEST_CASE("stdout ordinals re-parse to the printed value") {
    std::vector<std::vector<std::string>> corpus = {
        {"eval", "w^(w)*2 + w*3 + 5"},
        {"eval", "(w+1)@(w+1)@(w+1)"},
        {"infprod", "[w^w*2+1 ; 3]"},
        {"infsum", "[w^2 ; 1]"},
        {"oprod", "[5, w ; 1]"},
        {"osum", "[; w, 1]"},
        {"rank", "[; w]", "{1:7, 3:2}"},
        {"nprank", "w^2+w*3+2", "w*2+1", "w*4+1", "w+1"},
        {"rearrange-sum", "[w^2, w ; 1]"},
        {"rearrange-prod", "[w^(w^2), w^(w^3) ; w]"},
    };
    for (const auto& args : corpus) {
        Run r = run_cli(args);
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        while (std::getline(lines, line)) {
            Ordinal v = parse_ordinal(line);
            CHECK(v.str() == line);
        }
    }
}

TEST_CASE("selftest is deterministic per seed") {
    Run a = run_cli({"selftest", "--seed", "5"});
    Run b = run_cli({"selftest", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("all 13 suites passed") != std::string::npos);
}

TEST_CASE("selftest reports name the failing suite") {
    selftest::Report report;
    report.suites.push_back({"good-suite", 10, {}});
    report.suites.push_back({"broken-suite", 10, {"distributivity"}});
    CHECK(!report.ok());
    std::string text = report.str();
    CHECK(text.find("broken-suite: FAILED") != std::string::npos);
    CHECK(text.find("distributivity") != std::string::npos);
    CHECK(text.find("1 of 2 suites failed") != std::string::npos);
}
