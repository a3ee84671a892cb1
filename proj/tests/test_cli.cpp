#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "kpi/io.hpp"

#ifndef KPI_TEST_DATA
#define KPI_TEST_DATA "tests/data"
#endif

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = kpi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kExample = std::string(KPI_TEST_DATA) + "/worked_example.k";

std::string temp_file(const std::string& name, const std::string& content) {
    static int counter = 0;
    auto path = (std::filesystem::temp_directory_path() /
                 ("kpi_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + name))
                    .string();
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("prove") {
    Run unsat = run({"prove", "p & ~p"});
    CHECK(unsat.code == 1);
    CHECK(unsat.out == "UNSAT\n");
    Run sat = run({"prove", "<>p & []q"});
    CHECK(sat.code == 0);
    CHECK(sat.out.rfind("SAT\n", 0) == 0);
    auto m = kpi::Json::parse(sat.out.substr(4));
    CHECK(m["rel"].size() == 1);
    CHECK(run({"prove", "p &"}).code == 2);
}

TEST_CASE("compile and query the worked example") {
    Run c = run({"compile", kExample, "--json"});
    REQUIRE(c.code == 0);
    auto j = kpi::Json::parse(c.out);
    CHECK(j["converged"] == true);
    CHECK(j["prime_implicates"].size() == 3);
    CHECK(j["iterations"].get<int>() <= 10);

    std::string compiled = temp_file("compiled.json", c.out);
    Run yes = run({"query", compiled, "--clause", "[][](~p | r)"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "true [][](~p | r)\n");
    Run no = run({"query", compiled, "--clause", "[]q"});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
    CHECK(run({"query", compiled, "--clause", "p & q"}).code == 2);
    std::remove(compiled.c_str());
}

TEST_CASE("compile output is deterministic") {
    Run a = run({"compile", kExample});
    Run b = run({"compile", kExample, "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run t1 = run({"compile", kExample, "--text", "--rules", "basic"});
    Run t2 = run({"compile", kExample, "--text", "--rules", "basic"});
    CHECK(t1.out == t2.out);
    CHECK(t1.out.rfind("# 3 prime implicates", 0) == 0);
}

TEST_CASE("trace lines") {
    Run r = run({"compile", kExample, "--trace"});
    CHECK(r.code == 0);
    std::istringstream lines(r.err);
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line); ++n) {
        auto j = kpi::Json::parse(line);
        CHECK(j.contains("rule"));
        CHECK(j.contains("premises"));
        CHECK(j.contains("conclusion"));
        CHECK(j.contains("sub"));
    }
    CHECK(n > 0);
}

TEST_CASE("formula mode") {
    std::string path = temp_file("kb.k", "# one formula\np &\n(p -> q)\n");
    Run r = run({"compile", path, "--text", "--formula"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\np\nq\n") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("budget and iteration exits") {
    Run capped = run({"compile", kExample, "--max-iter", "1"});
    CHECK(capped.code == 3);
    CHECK(kpi::Json::parse(capped.out)["converged"] == false);
    Run budget = run({"compile", kExample, "--clause-budget", "2"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("pic stage 1") != std::string::npos);
}

TEST_CASE("usage and file errors") {
    Run missing = run({"compile", "/nonexistent/kb.k"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("/nonexistent/kb.k") != std::string::npos);
    Run bad_flag = run({"compile", kExample, "--frobnicate"});
    CHECK(bad_flag.code == 2);
    CHECK(bad_flag.err.find("--frobnicate") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"compile", kExample, "--max-iter", "0"}).code == 2);
    CHECK(run({"compile", kExample, "--json", "--text"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("oracle") {
    std::string path = temp_file("kb.k", "p\n~p | q\n");
    Run r = run({"oracle", path, "--vars", "p,q", "--depth", "0", "--width", "2"});
    CHECK(r.code == 0);
    auto j = kpi::Json::parse(r.out);
    REQUIRE(j["prime_implicates"].size() == 2);
    CHECK(j["prime_implicates"][0]["lits"][0] == "p");
    CHECK(j["prime_implicates"][1]["lits"][0] == "q");
    CHECK(run({"oracle", path, "--vars", "p", "--depth", "5"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("selftest at small scale") {
    Run r = run({"selftest", "--scale", "0.05"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
