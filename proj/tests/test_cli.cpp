// End-to-end tests of the command-line tool.  The path to the binary under
// test arrives as the last command-line argument (see tests/CMakeLists.txt);
// each case runs the tool as a subprocess and inspects stdout bytes and the
// exit status.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_tbm;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    RunResult r;
    std::string cmd = g_tbm + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

long count_lines(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("measure values, both formats, byte for byte") {
    RunResult j = run_tool("measure --family twisted --k 2 --z 2 --p 5 --N 1 --a 1 --format json");
    CHECK(j.status == 0);
    CHECK(j.out == "{\"value\":\"-516/961\",\"valuation\":0}\n");

    RunResult c = run_tool("measure --family twisted --k 2 --z 2 --p 5 --N 1 --a 1 --format csv");
    CHECK(c.status == 0);
    CHECK(c.out == "value,valuation\n-516/961,0\n");
}

TEST_CASE("special values and closed forms") {
    RunResult z = run_tool("zeta --k 2 --p 5");
    CHECK(z.status == 0);
    CHECK(z.out == "{\"k\":2,\"p\":5,\"value\":\"1/3\"}\n");

    RunResult pl = run_tool("polylog --k 1 --z 2 --p 3 --route closed");
    CHECK(pl.status == 0);
    CHECK(pl.out ==
          "{\"k\":1,\"p\":3,\"z\":\"2\",\"route\":\"closed\",\"value\":\"-6/7\",\"valuation\":1}\n");

    RunResult b = run_tool("bernoulli --k 12");
    CHECK(b.status == 0);
    CHECK(contains(b.out, "\"number\":\"-691/2730\""));

    RunResult be = run_tool("beta --k 3 --x 1/2 --y 2");
    CHECK(be.status == 0);
    CHECK(contains(be.out, "\"value\":\"51/4\""));
}

TEST_CASE("tables") {
    RunResult pl = run_tool("table --what padic-polylog --k 1 --p 3 --z 2");
    CHECK(pl.status == 0);
    CHECK(pl.out == "k,p,z,value\n1,3,2,-6/7\n");

    RunResult z = run_tool("table --what zeta --p 5 --kmax 6");
    CHECK(z.status == 0);
    CHECK(contains(z.out, "2,5,1/3"));
    CHECK(contains(z.out, "6,5,781/63"));

    RunResult b = run_tool("table --what beta --kmax 5");
    CHECK(b.status == 0);
    CHECK(count_lines(b.out) == 6);  // header + rows k = 1..5
    CHECK(contains(b.out, "[0 -2]/[1 -2 1]"));
}

TEST_CASE("integration reports") {
    RunResult r = run_tool(
        "integrate --family twisted --k 1 --z 2 --p 3 --domain zpstar --r 0");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"threshold_reached\":true"));
    CHECK(contains(r.out, "\"limit\":\"6/7\""));

    // No closed form exists for this family, so an explicit --limit is
    // required.
    RunResult bad = run_tool("integrate --family bernoulli --k 2 --p 3 --r 0 --domain zp");
    CHECK(bad.status == 2);

    // A scan that never attains the requested certificate is a verification
    // failure: the report is still printed, but the exit status is 1.
    RunResult miss = run_tool(
        "integrate --family koblitz --z 2 --p 3 --domain zpstar --r -1 "
        "--limit none --N 5 --scan-all --threshold 6");
    CHECK(miss.status == 1);
    CHECK(contains(miss.out, "\"threshold_reached\":false"));

    RunResult zmiss = run_tool("zeta --k 2 --p 5 --alpha 2 --N 1 --threshold 4");
    CHECK(zmiss.status == 1);
    CHECK(contains(zmiss.out, "\"threshold_reached\":false"));
}

TEST_CASE("verification suites through the CLI") {
    RunResult ok = run_tool("verify --suite uniqueness --format json");
    CHECK(ok.status == 0);
    CHECK(contains(ok.out, "\"ok\":true"));

    RunResult unknown = run_tool("verify --suite none");
    CHECK(unknown.status == 2);

    // Comma-separated and repeated --suite select the same subset.
    RunResult two = run_tool("verify --suite zeta,uniqueness --format csv");
    CHECK(two.status == 0);
    RunResult two_b = run_tool("verify --suite zeta --suite uniqueness --format csv");
    CHECK(two_b.status == 0);
    CHECK(two.out == two_b.out);
}

TEST_CASE("usage errors and help") {
    CHECK(run_tool("nonsense").status == 2);
    CHECK(run_tool("--help").status == 0);
    CHECK(run_tool("measure --family twisted --k 2 --p 5 --N 1 --a 1").status == 2);
    CHECK(run_tool("measure --family twisted --k 2 --z 1 --p 5 --N 1 --a 1").status == 2);
}

TEST_CASE("deterministic output and --out redirection") {
    std::string args = "zeta --k 4 --p 5 --alpha 2 --N 4";
    RunResult a = run_tool(args);
    RunResult b = run_tool(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    std::string path = "tbm_cli_out_check.json";
    RunResult c = run_tool(args + " --out " + path);
    CHECK(c.status == 0);
    CHECK(c.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream filebuf;
    filebuf << in.rdbuf();
    CHECK(filebuf.str() == a.out);
    std::remove(path.c_str());
}

int main(int argc, char** argv) {
    // Last argument (when not a flag) is the path to the tool under test.
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_tbm = argv[argc - 1];
        --argc;
    }
    if (g_tbm.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-tbm>\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
