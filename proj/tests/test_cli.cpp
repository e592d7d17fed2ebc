#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ROBTREE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string example(const std::string& name) {
    return std::string(ROBTREE_DATA) + "/examples/" + name;
}

}  // namespace

TEST(Cli, SolveBstReportsExactRatio) {
    const auto r = run("solve-bst --in " + example("three_keys.csv") + " --metric ratio");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["tree"]["levels"], (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(doc["report"]["ratio"]["value"], "9/5");
}

TEST(Cli, OracleRegret) {
    const auto r = run("oracle --in " + example("three_keys.csv") + " --family bst --metric regret");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"1/4\""), std::string::npos);
}

TEST(Cli, ParetoCsv) {
    const auto r = run("--format csv pareto --string 0101");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "alpha,beta,levels\n0,2,2 3 1 2\n1,1,2 1 2 3\n2,0,2 1 3 2\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("validate --levels 2,1,2 --family bst").status, 0);
    EXPECT_EQ(run("validate --levels 2,2,1 --family bst").status, 1);
    EXPECT_EQ(run("solve-bst --in /nonexistent.csv").status, 1);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("solve-bst --metric bogus").status, 2);
}

TEST(Cli, GeneratorWritesThreshold) {
    const auto out = std::filesystem::temp_directory_path() / "robtree_cli_partition.csv";
    ASSERT_EQ(run("gen partition --numbers 1,1 --out " + out.string()).status, 0);
    const auto r = run("oracle --in " + out.string() + " --family bst --metric worst");
    std::filesystem::remove(out);
    EXPECT_EQ(r.status, 0);
}
