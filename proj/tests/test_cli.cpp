// End-to-end tests of the gsdet binary. The binary path arrives as the last
// command-line argument (wired through ctest).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = "'" + g_cli + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return RunResult{-1, "popen failed"};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const std::string kTableR2N10 =
    "n,r,scope,N_1,N_zeta_1,N_negzeta_1,N_neg1,total\n"
    "1,2,aggregate,1,1,0,0,2\n"
    "2,2,aggregate,1,1,2,1,5\n"
    "3,2,aggregate,2,2,2,4,10\n"
    "4,2,aggregate,4,4,8,4,20\n"
    "5,2,aggregate,8,4,4,20,36\n"
    "6,2,aggregate,33,8,16,8,65\n"
    "7,2,aggregate,46,16,16,32,110\n"
    "8,2,aggregate,69,28,60,28,185\n"
    "9,2,aggregate,116,8,8,168,300\n"
    "10,2,aggregate,417,16,32,16,481\n";

} // namespace

TEST_CASE("det command") {
    RunResult r = run("det '1;1' --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-zeta^1\nx=1 y=1 f=2\n");

    CHECK(run("det '2;' --r 2").output.substr(0, 2) == "1\n");
    CHECK(run("det ';2' --r 2").output.substr(0, 7) == "zeta^1\n");

    // component count must match --r
    CHECK(run("det '1;1' --r 3").exit_code == 2);

    // parse failures carry a position and exit 2
    RunResult bad = run("det '2,1;x' --r 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("position 4") != std::string::npos);

    // json shape
    RunResult j = run("det '1;1' --r 2 --format json");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed.at("det") == "-zeta^1");
    CHECK(parsed.at("x") == 1);
    CHECK(parsed.at("f") == "2");

    // r=1 degrades to the symmetric group: the sign character
    CHECK(run("det '1,1' --r 1").output.substr(0, 3) == "-1\n");
    CHECK(run("det '2' --r 1").output.substr(0, 2) == "1\n");
}

TEST_CASE("table command output is pinned and byte-stable") {
    RunResult first = run("table --r 2 --n 10");
    CHECK(first.exit_code == 0);
    CHECK(first.output == kTableR2N10);

    CHECK(run("table --r 2 --n 10").output == first.output);
    CHECK(run("table --r 2 --n 10 --workers 3").output == first.output);
    CHECK(run("table --r 2 --n 10 --workers 1").output == first.output);
}

TEST_CASE("table rows for other wreath indices") {
    CHECK(run("table --r 3 --n 2").output ==
          "n,r,scope,N_1,N_zeta_1,N_zeta_2,N_negzeta_1,N_negzeta_2,N_neg1,total\n"
          "1,3,aggregate,1,1,1,0,0,0,3\n"
          "2,3,aggregate,1,1,1,2,2,2,9\n");
    RunResult r7 = run("table --r 7 --n 1");
    CHECK(r7.exit_code == 0);
    CHECK(r7.output.find("1,7,aggregate,1,1,1,1,1,1,1,0,0,0,0,0,0,0,7\n") != std::string::npos);
}

TEST_CASE("table --check separates defects from failures") {
    // the r=2 reference row at n=10 is a documented transcription defect:
    // reported by default, fatal only under --strict-paper
    RunResult lax = run("table --r 2 --n 10 --check");
    CHECK(lax.exit_code == 0);
    CHECK(lax.output.find("known published defect") != std::string::npos);

    CHECK(run("table --r 2 --n 10 --check --strict-paper").exit_code == 1);
    CHECK(run("table --r 2 --n 9 --check --strict-paper").exit_code == 0);
    CHECK(run("table --r 3 --n 5 --check --strict-paper").exit_code == 0);
}

TEST_CASE("table command writes files and plot data") {
    const auto dir = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(std::random_device{}());
    const auto base = dir / ("gsdet_test_" + std::to_string(rng()) + ".csv");
    const auto plot = dir / ("gsdet_test_" + std::to_string(rng()) + "_plot.csv");

    RunResult r = run("table --r 2 --n 10 --out '" + base.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(slurp(base) == kTableR2N10);
    // companion plot path is derived from --out
    auto derived = base;
    derived.replace_extension();
    derived += ".log2.csv";
    CHECK(std::filesystem::exists(derived));
    const std::string plot_text = slurp(derived);
    CHECK(plot_text.substr(0, 46) == "n,log2_N_1,log2_N_zeta_1,log2_N_negzeta_1,log2");
    CHECK(plot_text.find("1,0.000000,0.000000,,\n") != std::string::npos);

    RunResult r2 = run("table --r 2 --n 4 --out '" + base.string() + "' --plot-out '" +
                       plot.string() + "'");
    CHECK(r2.exit_code == 0);
    CHECK(std::filesystem::exists(plot));

    std::filesystem::remove(base);
    std::filesystem::remove(derived);
    std::filesystem::remove(plot);
}

TEST_CASE("table resource guard") {
    RunResult r = run("table --r 3 --n 10 --cap 100");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("exceeds") != std::string::npos);
    // the message states the estimated enumeration size
    CHECK(r.output.find("5772") != std::string::npos);  // sum of |P(n,3)|, n=1..10
}

TEST_CASE("count command") {
    RunResult agg = run("count --n 2 --r 2");
    CHECK(agg.exit_code == 0);
    CHECK(agg.output == "n,r,scope,N_1,N_zeta_1,N_negzeta_1,N_neg1,total\n"
                        "2,2,aggregate,1,1,2,1,5\n");

    RunResult comp = run("count --n 3 --r 3 --composition 3,0,0");
    CHECK(comp.exit_code == 0);
    CHECK(comp.output.find("3,3,\"3,0,0\",1,1,1,2,2,2,9") != std::string::npos);

    // the composition must match --n/--r and be weakly decreasing
    CHECK(run("count --n 3 --r 3 --composition 0,0,3").exit_code == 2);
    CHECK(run("count --n 4 --r 3 --composition 3,0,0").exit_code == 2);

    // (3,0,0) trips the documented closed-form defect only under strict mode
    CHECK(run("count --n 3 --r 3 --composition 3,0,0 --check").exit_code == 0);
    CHECK(run("count --n 3 --r 3 --composition 3,0,0 --check --strict-paper").exit_code == 1);
    CHECK(run("count --n 4 --r 3 --composition 2,1,1 --check --strict-paper").exit_code == 0);
}

TEST_CASE("classify command") {
    RunResult r = run("classify 2,2,2 --r 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("matching rows: 1 2 6") != std::string::npos);
    CHECK(r.output.find("possible determinant values: 1\n") != std::string::npos);

    RunResult rows = run("classify 3,3,0 --r 3 --check");
    CHECK(rows.exit_code == 0);
    CHECK(rows.output.find("matching rows:") != std::string::npos);

    // documented row-4 defect: reported, fatal only under strict mode
    RunResult defect = run("classify 4,4,0 --r 3 --check");
    CHECK(defect.exit_code == 0);
    CHECK(defect.output.find("known published defect") != std::string::npos);
    CHECK(run("classify 4,4,0 --r 3 --check --strict-paper").exit_code == 1);

    CHECK(run("classify 1,2,0 --r 3").exit_code == 2);  // not weakly decreasing
    CHECK(run("classify 2,2 --r 3").exit_code == 2);    // wrong length

    RunResult j = run("classify 1,1,1,1,0 --r 5 --format json");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed.at("rows").size() == 1);
    CHECK(parsed.at("rows")[0] == 5);
}

TEST_CASE("mp command") {
    RunResult r = run("mp --n 2 --r 2 --p 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "formula: 4\nenumeration: 4\n");

    CHECK(run("mp --n 1 --r 5 --p 3").output == "formula: 5\nenumeration: 5\n");
    CHECK(run("mp --n 0 --r 3 --p 2").output == "formula: 1\nenumeration: 1\n");
    CHECK(run("mp --n 2 --r 2 --p 6").exit_code == 2);  // p must be prime
}

TEST_CASE("verify command exit codes") {
    CHECK(run("verify --r 2 --n 4 --samples 100").exit_code == 0);
    CHECK(run("verify --r 3 --n 2 --samples 50 --strict-paper").exit_code == 0);
    // the first documented defect in the r=3 scope sits at n = 3
    CHECK(run("verify --r 3 --n 3 --samples 50 --strict-paper").exit_code == 1);

    RunResult fault = run("verify --r 2 --n 3 --samples 50 --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("FAIL") != std::string::npos);
    CHECK(fault.output.find("census-total") != std::string::npos);

    RunResult j = run("verify --r 2 --n 3 --samples 20 --format json");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed.at("ok") == true);
    CHECK(parsed.at("failed") == 0);
    CHECK(parsed.at("items").size() > 10);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("det").exit_code == 2);           // missing argument
    CHECK(run("table --r 4 --n 3").exit_code == 2);  // composite r
    CHECK(run("--help").exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-gsdet>\n");
        return 1;
    }
    g_cli = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
