#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(GOERITZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, AnalyzeJson) {
  const CliRun r = run("analyze 12 5 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["qPrime"], 5);
  EXPECT_EQ(j["classification"], "forest");
}

TEST(Cli, AnalyzeText) {
  const CliRun r = run("analyze 7 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("L(7,3)"), std::string::npos);
}

TEST(Cli, Shell) {
  const CliRun r = run("--format json shell 7 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["primitiveIndices"], (std::vector<int>{1, 2, 5, 6}));
}

TEST(Cli, Bridge) {
  const CliRun r = run("bridge 23 7 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["w"], "R");
  EXPECT_EQ(j["simplexCount"], 3);
  EXPECT_EQ(run("bridge 7 3").code, 1);
  EXPECT_EQ(run("bridge 23 7 --max-depth 0").code, 1);
}

TEST(Cli, Presentation) {
  const CliRun r = run("presentation 12 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("generators: alpha"), std::string::npos);
  const CliRun g = run("presentation --stabilizer Vertex --gap");
  ASSERT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("F := FreeGroup("), std::string::npos);
  EXPECT_EQ(run("presentation --stabilizer Bogus").code, 2);
  EXPECT_EQ(run("presentation 12").code, 2);
}

TEST(Cli, Complex) {
  const CliRun dot = run("complex shell 7 3 --format dot");
  ASSERT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
  const CliRun json = run("complex tree 12 5 --radius 1 --branching 3 --format json");
  ASSERT_EQ(json.code, 0);
  EXPECT_EQ(nlohmann::json::parse(json.out)["vertices"].size(), 4U);
  EXPECT_EQ(run("complex tree 7 3").code, 1);
  EXPECT_EQ(run("complex principal 12 5 --depth 99").code, 2);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run("analyze 12 4").code, 2);
  EXPECT_EQ(run("analyze twelve 5").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("--format yaml analyze 12 5").code, 2);
}

TEST(Cli, VerifySmoke) {
  const CliRun r = run("verify --max-p 12 --classification-max-p 30 --max-len 6 --oz-len 8 --random-words 200 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["suites"].size(), 8U);
}

TEST(Cli, VerifyReportsInjectedFailure) {
  const CliRun r = run("verify --suite presentations --max-p 12 --inject-failure presentations --format json");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["suites"][0]["counterexamples"].empty());
}

TEST(Cli, OutputsMatchGoldens) {
  auto golden = [](const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::pair<const char*, const char*> cases[] = {
      {"presentation 12 5 --quiet", "presentation_L12_5.txt"},
      {"presentation 23 7 --format json", "presentation_L23_7.json"},
      {"complex shell 12 5 --format json", "shell_12_5.json"},
      {"complex principal 12 5 --depth 3 --format dot", "principal_12_5_d3.dot"},
      {"complex bridge 12 5 --format dot", "bridge_12_5.dot"},
  };
  for (const auto& [args, file] : cases) {
    const CliRun first = run(args);
    const CliRun second = run(args);
    EXPECT_EQ(first.code, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
    EXPECT_EQ(first.out, golden(file)) << args;
  }
}
