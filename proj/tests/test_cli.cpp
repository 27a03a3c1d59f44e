// End-to-end checks of the frale binary: argv[1] is the path to it.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_frale;
std::string g_tmpdir;

int run(const std::string& args) {
    std::string cmd = g_frale + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string run_capture(const std::string& args) {
    std::string out_file = g_tmpdir + "/stdout.txt";
    std::string cmd = g_frale + " " + args + " > " + out_file + " 2>/dev/null";
    if (std::system(cmd.c_str()) == -1) return {};
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("simulate: same seed twice gives byte-identical CSV") {
    std::string a = g_tmpdir + "/a.csv";
    std::string b = g_tmpdir + "/b.csv";
    std::string args = "simulate --process mg --hurst 0.75 --horizon 1 --grid 64 --seed 42";
    REQUIRE(run(args + " --out " + a) == 0);
    REQUIRE(run(args + " --out " + b) == 0);
    std::string ca = slurp(a), cb = slurp(b);
    CHECK(ca == cb);
    CHECK(ca.find("# kind=flpmg") != std::string::npos);
    CHECK(ca.find("# scheme=jumpsum") != std::string::npos);
    CHECK(ca.find("t,value") != std::string::npos);

    // and thread count must not change the bytes
    std::string c = g_tmpdir + "/c.csv";
    std::string cmd = "FRALE_THREADS=1 " + g_frale + " " + args + " --out " + c +
                      " > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(slurp(c) == ca);
}

TEST_CASE("simulate: H = 1/2 kernel column is constant 1 through the kernel command") {
    std::string out = run_capture("kernel --kind mg --hurst 0.5 --t 1 --points 16");
    std::istringstream lines(out);
    std::string line;
    bool in_data = false;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line == "s,value") {
            in_data = true;
            continue;
        }
        if (!in_data || line.empty()) continue;
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stod(line.substr(comma + 1)) == 1.0);
        ++rows;
    }
    CHECK(rows == 15);
}

TEST_CASE("kernel: divergent moment prints 'divergent'") {
    std::string out = run_capture("kernel --kind mg --hurst 0.8 --moment 4 --points 8");
    CHECK(out.find("divergent") == 0);
}

TEST_CASE("kernel: g1g2 sweep is positive everywhere") {
    std::string out = run_capture("kernel --g1g2");
    std::istringstream lines(out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "H,g1,g2,difference");
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto last = line.rfind(',');
        CHECK(std::stod(line.substr(last + 1)) > 0.0);
        ++rows;
    }
    CHECK(rows == 49);
}

TEST_CASE("invalid inputs exit with code 2") {
    CHECK(run("simulate --process mg --hurst 1.5 --horizon 1 --grid 8 --seed 1") == 2);
    CHECK(run("kernel --hurst 0.75 --moment 1 --points 8") == 2);
    std::string bad_spec = g_tmpdir + "/bad_spec.json";
    {
        std::ofstream f(bad_spec);
        f << R"({"atoms": [{"x": 1.0, "rate": 1.0}]})"; // nonzero mean
    }
    CHECK(run("simulate --process mg --hurst 0.75 --horizon 1 --grid 8 --seed 1 --spec " +
              bad_spec) == 2);
}

TEST_CASE("spec JSON round trip drives the simulation") {
    std::string spec = g_tmpdir + "/spec.json";
    {
        std::ofstream f(spec);
        f << R"({"atoms": [{"x": -1.0, "rate": 0.5}, {"x": 1.0, "rate": 0.5}]})";
    }
    std::string with_spec = g_tmpdir + "/with_spec.csv";
    std::string default_spec = g_tmpdir + "/default_spec.csv";
    std::string args = "simulate --process mvn --hurst 0.6 --horizon 1 --grid 32 --seed 9";
    REQUIRE(run(args + " --spec " + spec + " --out " + with_spec) == 0);
    REQUIRE(run(args + " --out " + default_spec) == 0);
    CHECK(slurp(with_spec) == slurp(default_spec)); // same measure, same bytes
}

TEST_CASE("svg output is produced and stable") {
    std::string svg1 = g_tmpdir + "/p1.svg";
    std::string svg2 = g_tmpdir + "/p2.svg";
    std::string args = "simulate --process fbm --hurst 0.75 --horizon 1 --grid 32 --seed 3";
    REQUIRE(run(args + " --svg " + svg1 + " --out /dev/null") == 0);
    REQUIRE(run(args + " --svg " + svg2 + " --out /dev/null") == 0);
    std::string s = slurp(svg1);
    CHECK(s == slurp(svg2));
    CHECK(s.find("<svg") == 0);
    CHECK(s.find("polyline") != std::string::npos);
}

TEST_CASE("verify: constants suite passes and writes a JSON verdict") {
    std::string json = g_tmpdir + "/verdict.json";
    CHECK(run("verify --suite constants --json " + json) == 0);
    std::string v = slurp(json);
    CHECK(v.find("\"suite\": \"constants\"") != std::string::npos);
    CHECK(v.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(run("verify --suite no-such-suite") == 2);
}

TEST_CASE("verify: exhausted budget flags the report incomplete (exit 3)") {
    CHECK(run("verify --suite cumulants --budget 0.000001 --ensemble 50000") == 3);
}

TEST_CASE("verify: wiener suite accepts a user step function") {
    std::string stepfn = g_tmpdir + "/g.json";
    {
        std::ofstream f(stepfn);
        f << R"([{"upto": 0.5, "level": 2.0}, {"upto": 1.0, "level": -1.0}])";
    }
    CHECK(run("verify --suite wiener --ensemble 4000 --stepfn " + stepfn) == 0);
    std::string bad = g_tmpdir + "/bad_g.json";
    {
        std::ofstream f(bad);
        f << R"([{"upto": -1.0, "level": 2.0}])";
    }
    CHECK(run("verify --suite wiener --ensemble 1000 --stepfn " + bad) == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-frale> [doctest args]\n");
        return 2;
    }
    g_frale = argv[1];
    const char* tmp = std::getenv("TMPDIR");
    g_tmpdir = tmp ? tmp : "/tmp";
    g_tmpdir += "/frale_cli_test";
    if (std::system(("mkdir -p " + g_tmpdir).c_str()) != 0) return 2;

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
