#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "h2s/io.hpp"
#include "h2s/reduction.hpp"
#include "h2s/selftest.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(H2S_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return std::string(H2S_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, HadamardPrintsRows) {
    const auto r = run("hadamard --order 4 --verify");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "++++\n+-+-\n++--\n+--+\northogonal: true\n");
}

TEST(Cli, HadamardRejectsNonPowerOfTwo) { EXPECT_EQ(run("hadamard --order 3").exit_code, 2); }

TEST(Cli, UnknownFlagIsUsageError) {
    EXPECT_EQ(run("solve --input x --bogus").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("verify --graph " + data("triangle.g")).exit_code, 2);
    EXPECT_EQ(run("verify --graph " + data("triangle.g") + " --block-size 4 --auto-M").exit_code, 2);
}

TEST(Cli, SolveExactToy) {
    const auto r = run("solve --method exact --input " + data("toy.h2s"));
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["l1_value"], 4);
    EXPECT_EQ(j["agreement_value"], 5);
    EXPECT_EQ(j["method"], "exact");
}

TEST(Cli, SolveReportsAreDeterministic) {
    for (const char* m : {"exact", "local", "pairs"}) {
        const std::string args = std::string("solve --method ") + m + " --seed 9 --restarts 3 --input " + data("toy.h2s");
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.exit_code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, SolveRefusesAboveExactLimit) {
    EXPECT_EQ(run("solve --method exact --max-exact-k 2 --input " + data("toy.h2s")).exit_code, 2);
}

TEST(Cli, MalformedInputIsFormatError) {
    const auto bad = write_temp("bad.h2s", "2 2\n+-\n+\n");
    EXPECT_EQ(run("solve --input " + bad).exit_code, 2);
    const auto loop = write_temp("loop.g", "2 1\n1 1\n");
    EXPECT_EQ(run("maxcut --input " + loop).exit_code, 2);
}

TEST(Cli, MaxcutTriangle) {
    const auto r = run("maxcut --input " + data("triangle.g"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["cut_value"], 2);
    const auto l = run("maxcut --method local --seed 3 --input " + data("triangle.g"));
    EXPECT_EQ(nlohmann::json::parse(l.out)["cut_value"], 2);
}

TEST(Cli, ReduceOutputReloadsToTheInMemoryReduction) {
    const auto out = ::testing::TempDir() + "tri4.h2s";
    ASSERT_EQ(run("reduce --graph " + data("triangle.g") + " --block-size 4 --out " + out).exit_code, 0);
    const auto expected = h2s::reduce_graph(h2s::orient_edges(h2s::selftest::triangle()), h2s::ReductionParams(4));
    EXPECT_EQ(h2s::load_instance(out), expected);

    const auto solved = run("solve --method exact --input " + out);
    ASSERT_EQ(solved.exit_code, 0);
    EXPECT_EQ(run("reduce --graph " + data("triangle.g") + " --block-size 3").exit_code, 2);
}

TEST(Cli, VerifyTriangleExact) {
    const auto r = run("verify --graph " + data("triangle.g") + " --block-size 4 --solver exact");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["verdicts"]["yes_bound"].get<bool>());
    EXPECT_TRUE(j["verdicts"]["upper_bound"].get<bool>());
    EXPECT_TRUE(j["verdicts"]["gap"].get<bool>());
    EXPECT_EQ(j["seed"], 1);
    EXPECT_EQ(run("verify --graph " + data("triangle.g") + " --block-size 4 --solver exact").out, r.out);
}

TEST(Cli, VerifyAutoM) {
    const auto r = run("verify --graph " + data("triangle.g") + " --auto-M --solver pairs --samples 200");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["M"], 16);
    EXPECT_TRUE(j["gap_applicable"].get<bool>());
}
