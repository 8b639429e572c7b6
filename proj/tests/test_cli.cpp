#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

int counter = 0;

RunResult run_cli(const std::string& args) {
    std::string path = "/tmp/dfv_cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(DFV_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(path.c_str());
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("orbit enumeration over the command line") {
    auto r = run_cli("orbits --p 1 --q 1 --r 1");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.find("\"phi_k\"") != std::string::npos);
}

TEST_CASE("invalid rank is a usage error") {
    CHECK(run_cli("orbits --p 1 --q 1 --r 3").exit_code == 2);
    CHECK(run_cli("orbits --p 1 --q 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("tsv output contains the worked example row") {
    auto r = run_cli("orbits --p 5 --q 3 --r 4 --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("p\tq\tr\tomega", 0) == 0);
    CHECK(r.out.find("[(2,3) (4,1) +m5 -m2 +f1 +f3]\t25\t2,1,1,1\t2,1") !=
          std::string::npos);
}

TEST_CASE("dot output renders the closure poset") {
    auto r = run_cli("orbits --p 2 --q 1 --r 2 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("digraph closure", 0) == 0);
    CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("identical invocations are byte identical") {
    auto a = run_cli("orbits --p 2 --q 2 --r 3");
    auto b = run_cli("orbits --p 2 --q 2 --r 3");
    CHECK(a.out == b.out);
    auto c = run_cli("verify --suite oracle --pmax 2 --qmax 2 --seed 5");
    auto d = run_cli("verify --suite oracle --pmax 2 --qmax 2 --seed 5");
    CHECK(c.out == d.out);
}

TEST_CASE("classification verdicts") {
    auto bad = run_cli("classify aiii --a 1,1 --b 1,1 --c 1,1,1,1");
    CHECK(bad.exit_code == 0);
    CHECK(bad.out.find("\"finite\":false") != std::string::npos);
    CHECK(bad.out.find("\"witness\":{") != std::string::npos);

    auto good = run_cli("classify aiii --a 1,1,1 --b 1,1 --c 2,3");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("\"finite\":true") != std::string::npos);
    CHECK(good.out.find("\"witness\":null") != std::string::npos);

    auto triple = run_cli("classify triple-a --a1 1,1 --a2 1,1 --a3 1,1");
    CHECK(triple.exit_code == 0);
    CHECK(triple.out.find("\"finite\":true") != std::string::npos);

    CHECK(run_cli("classify aiii --a 1,x --b 1 --c 1,1").exit_code == 2);
}

TEST_CASE("verification suites pass and report failure codes correctly") {
    auto grs = run_cli("verify --suite grs --pmax 2 --qmax 2");
    CHECK(grs.exit_code == 0);
    CHECK(grs.out.find("PASS") != std::string::npos);
    CHECK(run_cli("verify --suite closure --pmax 2 --qmax 2").exit_code == 0);
    CHECK(run_cli("verify --suite ci --pmax 2").exit_code == 0);
    CHECK(run_cli("verify --suite nilpotency --seed 11").exit_code == 0);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("output redirection") {
    std::string path = "/tmp/dfv_cli_redirect.txt";
    auto r = run_cli("orbits --p 1 --q 1 --r 1 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(count_lines(ss.str()) == 3);
    std::remove(path.c_str());
}
