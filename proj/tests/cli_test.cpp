// Runs the built CLI binary and checks output and exit codes.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string command = std::string(ALTERNATOR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp(const std::string& name) { return ::testing::TempDir() + "cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliBounds, SmallTable) {
  const CliResult run = cli("bounds --from 1 --to 11");
  ASSERT_EQ(run.exit_code, 0);
  std::istringstream lines(run.out);
  std::string header;
  std::getline(lines, header);
  const int expected[][4] = {{1, 0, 0, 0}, {2, 1, 2, 2}, {3, 1, 2, 2}, {4, 2, 3, 3},
                             {5, 2, 3, 3}, {6, 3, 4, 4}, {7, 3, 4, 4}, {8, 3, 4, 4},
                             {9, 3, 4, 4}, {10, 3, 4, 4}, {11, 3, 4, 4}};
  for (const auto& row : expected) {
    int n = 0, f = 0, r = 0, a = 0;
    lines >> n >> f >> r >> a;
    EXPECT_EQ(n, row[0]);
    EXPECT_EQ(f, row[1]) << n;
    EXPECT_EQ(r, row[2]) << n;
    EXPECT_EQ(a, row[3]) << n;
    std::string rest;
    std::getline(lines, rest);
  }
  EXPECT_TRUE(contains(run.out, "J_4=5 < N <= J_5=11"));
}

TEST(CliBounds, BadRange) {
  EXPECT_EQ(cli("bounds --from 5 --to 2").exit_code, 2);
  EXPECT_EQ(cli("bounds --from 0 --to 2").exit_code, 2);
  EXPECT_EQ(cli("bounds --from x --to 2").exit_code, 2);
}

TEST(CliBuild, WritesByteStableDocuments) {
  const std::string a = temp("build_a.json");
  const std::string b = temp("build_b.json");
  ASSERT_EQ(cli("build --coins 5 --state a --out " + a).exit_code, 0);
  ASSERT_EQ(cli("build --coins 5 --state a --out " + b).exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a), slurp(std::string(ALTERNATOR_GOLDEN_DIR) + "/strategy_5_a.json"));
}

TEST(CliBuild, SmallDocuments) {
  const std::string path = temp("build_3f.json");
  ASSERT_EQ(cli("build --coins 3 --state f --out " + path).exit_code, 0);
  const std::string text = slurp(path);
  EXPECT_TRUE(contains(text, "\"left\": [\n        0\n      ]"));
  EXPECT_TRUE(contains(text, "\"right\": [\n        1\n      ]"));

  const CliResult single = cli("build --coins 1 --state a");
  ASSERT_EQ(single.exit_code, 0);
  EXPECT_TRUE(contains(single.out, "\"alternator\": 0"));
}

TEST(CliBuild, Errors) {
  EXPECT_EQ(cli("build --coins 3 --state f --out /nonexistent-dir/t.json").exit_code, 1);
  EXPECT_EQ(cli("build --coins 0 --state f").exit_code, 2);
  EXPECT_EQ(cli("build --coins 3 --state z").exit_code, 2);
}

TEST(CliVerify, ValidTree) {
  const std::string path = temp("verify_4a.json");
  ASSERT_EQ(cli("build --coins 4 --state a --out " + path).exit_code, 0);
  const CliResult run = cli("verify " + path);
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_TRUE(contains(run.out, "valid: yes"));
  EXPECT_TRUE(contains(run.out, "max depth: 3"));
  EXPECT_TRUE(contains(run.out, "worlds checked: 8"));
  EXPECT_EQ(cli("verify --threads 3 " + path).exit_code, 0);
}

TEST(CliVerify, MutatedLeafFails) {
  const std::string path = temp("verify_mutant.json");
  ASSERT_EQ(cli("build --coins 3 --state f --out " + path).exit_code, 0);
  std::string text = slurp(path);
  const std::string leaf = "\"on_equal\": {\n      \"alternator\": 2";
  const auto at = text.find(leaf);
  ASSERT_NE(at, std::string::npos);
  text.replace(at + leaf.size() - 1, 1, "0");
  write(path, text);
  const CliResult run = cli("verify " + path);
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_TRUE(contains(run.out, "failure: alternator 2 starting f"));
}

TEST(CliVerify, MalformedInput) {
  const std::string path = temp("verify_truncated.json");
  ASSERT_EQ(cli("build --coins 6 --state r --out " + path).exit_code, 0);
  const std::string text = slurp(path);
  write(path, text.substr(0, text.size() / 3));
  EXPECT_EQ(cli("verify " + path).exit_code, 2);
  EXPECT_EQ(cli("verify " + temp("does_not_exist.json")).exit_code, 2);
}

TEST(CliSimulate, Transcripts) {
  const std::string five = temp("sim_5a.json");
  ASSERT_EQ(cli("build --coins 5 --state a --out " + five).exit_code, 0);
  const CliResult aside = cli("simulate " + five + " --alternator 4 --start f");
  EXPECT_EQ(aside.exit_code, 0);
  EXPECT_TRUE(contains(aside.out, "1. {0,1} v {2,3} -> E"));
  EXPECT_TRUE(contains(aside.out, "2. {0} v {1} -> E"));
  EXPECT_TRUE(contains(aside.out, "3. {2} v {3} -> E"));
  EXPECT_TRUE(contains(aside.out, "alternator: 4\n"));

  const std::string two = temp("sim_2r.json");
  ASSERT_EQ(cli("build --coins 2 --state r --out " + two).exit_code, 0);
  const CliResult toggled = cli("simulate " + two + " --alternator 0 --start r");
  EXPECT_EQ(toggled.exit_code, 0);
  EXPECT_TRUE(contains(toggled.out, "1. {0} v {1} -> E  (alternator now f)"));
  EXPECT_TRUE(contains(toggled.out, "2. {0} v {1} -> L  (alternator now r)"));

  const std::string three = temp("sim_3f.json");
  ASSERT_EQ(cli("build --coins 3 --state f --out " + three).exit_code, 0);
  const CliResult right = cli("simulate " + three + " --alternator 1 --start f");
  EXPECT_EQ(right.exit_code, 0);
  EXPECT_TRUE(contains(right.out, "1. {0} v {1} -> R"));
  EXPECT_FALSE(contains(right.out, "2. "));
  EXPECT_TRUE(contains(right.out, "alternator: 1\n"));
}

TEST(CliSimulate, Errors) {
  const std::string three = temp("sim_err_3f.json");
  ASSERT_EQ(cli("build --coins 3 --state f --out " + three).exit_code, 0);
  EXPECT_EQ(cli("simulate " + three + " --alternator 1 --start r").exit_code, 2);
  EXPECT_EQ(cli("simulate " + three + " --alternator 3 --start f").exit_code, 2);
}

TEST(CliSearch, MatchesBound) {
  const CliResult four = cli("search --coins 4 --state a --budget 5");
  EXPECT_EQ(four.exit_code, 0);
  EXPECT_EQ(four.out.rfind("3 (matches bound)", 0), 0u) << four.out;

  const CliResult eleven = cli("search --coins 11 --state a --budget 6");
  EXPECT_EQ(eleven.exit_code, 0);
  EXPECT_TRUE(contains(eleven.out, "4 (matches bound)"));

  const CliResult one = cli("search --coins 1 --state f --budget 0");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.out.rfind("0", 0), 0u);
}

TEST(CliSearch, EmitsVerifiableTree) {
  const std::string path = temp("search_tree.json");
  ASSERT_EQ(cli("search --coins 6 --state r --budget 6 --emit-tree " + path).exit_code, 0);
  const CliResult run = cli("verify " + path);
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_TRUE(contains(run.out, "max depth: 4"));
}

TEST(CliSearch, Limits) {
  EXPECT_EQ(cli("search --coins 16 --state a --budget 6").exit_code, 2);
  EXPECT_EQ(cli("search --coins 4 --state a --budget 11").exit_code, 2);
  EXPECT_EQ(cli("search --coins 4 --state a --budget 2").exit_code, 1);
  EXPECT_EQ(cli("search --coins 16 --state f --budget 6 --max-coins 16").exit_code, 0);
}

TEST(CliStrings, Listings) {
  EXPECT_EQ(cli("strings --length 1").out, "3\nE\nL\nR\n");
  EXPECT_EQ(cli("strings --length 2").out, "5\nEE\nEL\nER\nLE\nRE\n");
  EXPECT_EQ(cli("strings --length 0").out, "1\n\n");
  const CliResult twelve = cli("strings --length 12");
  EXPECT_EQ(twelve.exit_code, 0);
  EXPECT_EQ(twelve.out.substr(0, twelve.out.find('\n')), "5461");
  EXPECT_EQ(cli("strings --length 13").exit_code, 2);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(cli("").exit_code, 2);
  EXPECT_EQ(cli("frobnicate").exit_code, 2);
  const CliResult help = cli("--help");
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_TRUE(contains(help.out, "numbered from 0"));
}

}  // namespace
