// End-to-end tests of the command-line tool: every subcommand, the exit-code
// contract and byte-determinism of the machine-readable output.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string fixture(const std::string& name) {
    return std::string(HYPERSPEC_FIXTURES_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
    return testing::TempDir() + name;
}

CliResult run_cli(const std::string& args, const std::string& stdin_path = "") {
    std::string cmd = std::string(HYPERSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_path.empty()) cmd += " < " + stdin_path;
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

TEST(CliGen, SunflowerJson) {
    const CliResult res = run_cli("gen sunflower --d 2 --k 3");
    ASSERT_EQ(res.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["k"], 3);
    EXPECT_EQ(j["edges"].size(), 2u);
}

TEST(CliGen, GeneratorsRoundTripThroughEig) {
    const std::string gen_file = temp_path("cli_p3_pow4.json");
    ASSERT_EQ(run_cli("gen power --k 4 --input " + fixture("p3.json") +
                      " --output " + gen_file)
                  .exit_code,
              0);
    const CliResult eig = run_cli("eig --tensor Q --input " + gen_file);
    ASSERT_EQ(eig.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(eig.out);
    EXPECT_NEAR(j["lambda"].get<double>(), 2.5436890126920763616, 1e-8);
}

TEST(CliGen, GeneralizedPowerAndStdin) {
    const CliResult res =
        run_cli("gen power --k 4 --s 2 --input -", fixture("p3.json"));
    ASSERT_EQ(res.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j["n"], 6);  // 2*3 + 0*2
    EXPECT_EQ(j["k"], 4);
}

TEST(CliEig, SingleEdgeLambdaTwo) {
    const CliResult res = run_cli("eig --tensor Q --input " + fixture("s1_3.json"));
    ASSERT_EQ(res.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_DOUBLE_EQ(j["lambda"].get<double>(), 2.0);
    EXPECT_TRUE(j["flags"].empty());
}

TEST(CliEig, TextInputAndCsvFormat) {
    const CliResult res =
        run_cli("eig --tensor Q --format csv --input " + fixture("p3.txt"));
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.out.rfind("lambda,lower,upper,iterations,residual\n3,", 0), 0u);
}

TEST(CliEig, LaplacianRoutes) {
    const CliResult graph = run_cli("eig --tensor L --input " + fixture("p3.json"));
    ASSERT_EQ(graph.exit_code, 0);
    EXPECT_NEAR(nlohmann::json::parse(graph.out)["lambda"].get<double>(), 3.0, 1e-9);
    // odd uniformity is out of scope for L: input error
    EXPECT_EQ(run_cli("eig --tensor L --input " + fixture("s1_3.json")).exit_code, 2);
}

TEST(CliScan, CsvFirstRow) {
    const CliResult res =
        run_cli("scan --tensor Q --input " + fixture("p3.json") +
                " --k-to 6 --format csv");
    ASSERT_EQ(res.exit_code, 0);
    std::istringstream in(res.out);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, "k,lambda,lower,upper,iterations");
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line.rfind("2,3", 0), 0u);
    int rows = 1;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    EXPECT_EQ(rows, 5);  // k = 2..6
}

TEST(CliScan, AcceptsGenOutputUnmodified) {
    const std::string gen_file = temp_path("cli_path4.json");
    ASSERT_EQ(run_cli("gen path --n 4 --output " + gen_file).exit_code, 0);
    const CliResult res = run_cli("scan --input " + gen_file + " --k-to 4");
    ASSERT_EQ(res.exit_code, 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_TRUE(j["is_strictly_decreasing"].get<bool>());
    EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(CliScan, ByteIdenticalAcrossRuns) {
    const std::string args =
        "scan --tensor A --input " + fixture("p3.json") + " --k-to 5 --format csv";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    const CliResult j1 = run_cli("eig --input " + fixture("s2_3.json"));
    const CliResult j2 = run_cli("eig --input " + fixture("s2_3.json"));
    EXPECT_EQ(j1.out, j2.out);
}

TEST(CliVerify, OddBipartiteSuitePasses) {
    const CliResult res = run_cli("verify odd-bipartite");
    ASSERT_EQ(res.exit_code, 0);
    const nlohmann::json reports = nlohmann::json::parse(res.out);
    ASSERT_EQ(reports.size(), 5u);
    for (const auto& r : reports) EXPECT_TRUE(r["pass"].get<bool>());
}

TEST(CliVerify, RemarkSuiteFailsAtSmallDelta) {
    const CliResult res = run_cli("verify remark --delta 1");
    EXPECT_EQ(res.exit_code, 1);
    const nlohmann::json reports = nlohmann::json::parse(res.out);
    EXPECT_FALSE(reports[0]["pass"].get<bool>());
}

TEST(CliVerify, RemarkSuiteAutoDeltaPasses) {
    const CliResult res = run_cli("verify remark");
    EXPECT_EQ(res.exit_code, 0);
}

TEST(CliExitCodes, UsageAndInputErrors) {
    EXPECT_EQ(run_cli("eig --input " + fixture("p3.json") + " --bogus-flag").exit_code,
              2);
    EXPECT_EQ(run_cli("nonsense-subcommand").exit_code, 2);
    EXPECT_EQ(run_cli("eig --input /does/not/exist.json").exit_code, 2);
    EXPECT_EQ(run_cli("scan --input " + fixture("s1_3.json") + " --k-to 6").exit_code,
              2);  // scan needs an ordinary graph
    EXPECT_EQ(run_cli("gen sunflower --d 0 --k 3").exit_code, 2);
    EXPECT_EQ(run_cli("verify no-such-suite").exit_code, 2);
}

TEST(CliExitCodes, NonConvergenceIsThree) {
    const CliResult res =
        run_cli("eig --max-iter 2 --tensor Q --input " + fixture("s2_3.json"));
    EXPECT_EQ(res.exit_code, 3);
    // the enclosure is still printed
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_LE(j["lower"].get<double>(), 2.6956207695598620574);
    EXPECT_GE(j["upper"].get<double>(), 2.6956207695598620574);
    EXPECT_FALSE(j["flags"].empty());
}

TEST(CliHelp, ExitsZero) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
    EXPECT_EQ(run_cli("eig --help").exit_code, 0);
}

}  // namespace
