#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RSTRE_CLI_PATH
#error "RSTRE_CLI_PATH must point at the built CLI binary"
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(RSTRE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, MissingSubcommandIsUsageError) { EXPECT_EQ(run(""), 2); }

TEST(Cli, UnknownVerifySuiteIsUsageError) { EXPECT_EQ(run("verify nonsense"), 2); }

TEST(Cli, BadFlagValueIsConfigError) {
    EXPECT_EQ(run("sweep-diameter --n 64 --trials nope"), 2);
}

TEST(Cli, NonIncreasingGridIsConfigError) {
    EXPECT_EQ(run("sweep-diameter --n-grid 128,64 --trials 2 --seed 1"), 2);
}

TEST(Cli, UnwritableOutputIsIoError) {
    EXPECT_EQ(run("sweep-diameter --n 32 --trials 1 --seed 1 --gamma 5 "
                  "--out /nonexistent-dir/x.csv"),
              3);
}

TEST(Cli, SweepRunsAndIsByteIdenticalAcrossReruns) {
    const std::string out1 = testing::TempDir() + "cli-a.csv";
    const std::string out2 = testing::TempDir() + "cli-b.csv";
    const std::string shared =
        "sweep-diameter --gamma 5 --n-grid 64,128 --trials 4 --seed 9 --out ";
    ASSERT_EQ(run(shared + out1), 0);
    ASSERT_EQ(run(shared + out2 + " --threads 1"), 0);
    const std::string a = slurp(out1);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(out2));
    EXPECT_EQ(slurp(out1 + ".meta"), slurp(out2 + ".meta"));
}

TEST(Cli, RepeatSweepWritesProbes) {
    const std::string out = testing::TempDir() + "cli-repeat.csv";
    ASSERT_EQ(run("sweep-repeat --n 365 --trials 3 --seed 4 --gamma 0 --probe-k 23 --out " +
                  out),
              0);
    const std::string probes = slurp(out + ".probes.csv");
    EXPECT_NE(probes.find("trial,k,p_no_repeat"), std::string::npos);
    EXPECT_NE(probes.find("0,23,"), std::string::npos);
}

TEST(Cli, ComponentStatsEmitsTable) {
    const std::string out = testing::TempDir() + "cli-stats.csv";
    ASSERT_EQ(run("component-stats --n 1000 --trials 500 --j-max 3 --seed 2 --out " + out),
              0);
    const std::string table = slurp(out);
    EXPECT_NE(table.find("n,j,count"), std::string::npos);
    EXPECT_NE(table.find("\n1000,1,"), std::string::npos);
}

TEST(Cli, ConfigFileDrivesSweepAndFlagsOverride) {
    const std::string conf = testing::TempDir() + "cli.toml";
    {
        std::ofstream c(conf);
        c << "mode = \"diameter\"\ngamma = 5\nn_grid = [64]\ntrials = 2\nseed = 7\n";
    }
    const std::string out = testing::TempDir() + "cli-conf.csv";
    ASSERT_EQ(run("sweep-diameter --config " + conf + " --trials 3 --out " + out), 0);
    const std::string data = slurp(out);
    // 3 records: header + 3 lines (flag overrode the file's trials = 2)
    EXPECT_EQ(std::count(data.begin(), data.end(), '\n'), 4);
}

TEST(Cli, ConfigWithoutModeInheritsTheSubcommand) {
    const std::string conf = testing::TempDir() + "cli-nomode.toml";
    {
        std::ofstream c(conf);
        c << "n = 128\ntrials = 2\nseed = 5\ngamma = 0\n";
    }
    EXPECT_EQ(run("sweep-repeat --config " + conf), 0);
}

TEST(Cli, ConfigModeMismatchRejected) {
    const std::string conf = testing::TempDir() + "cli-mode.toml";
    {
        std::ofstream c(conf);
        c << "mode = \"repeat\"\nn = 64\n";
    }
    EXPECT_EQ(run("sweep-diameter --config " + conf), 2);
}

TEST(Cli, TinyBudgetVerifyRunsReducedOracles) {
    const std::string log = testing::TempDir() + "verify.log";
    const std::string cmd = std::string(RSTRE_CLI_PATH) +
                            " verify oracles --budget tiny --seed 1 > " + log + " 2>&1";
    ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
    const std::string text = slurp(log);
    EXPECT_NE(text.find("reduced-budget"), std::string::npos);
    EXPECT_NE(text.find("PASS  ust-law-k4-heavy-edge"), std::string::npos);
    EXPECT_NE(text.find("kirchhoff-identity"), std::string::npos);
}
