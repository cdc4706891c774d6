#include <gtest/gtest.h>

#include <cstdlib>

#include "cli_runner.hpp"
#include "qlogic/model_file.hpp"

using namespace qtest;
using nlohmann::json;

TEST(Cli, WorkedExamples) {
  for (const auto& c : cli_cases()) {
    const CliResult r = run_cli(c.args);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.label;
    if (c.expected) {
      const json got = json::parse(r.out, nullptr, false);
      ASSERT_FALSE(got.is_discarded()) << c.label << ": " << r.out;
      EXPECT_TRUE(json_close(got, json::parse(c.expected))) << c.label << ": " << r.out;
    }
  }
}

TEST(Cli, SyntaxErrorNamesTheDanglingOperator) {
  const CliResult r = run_cli({"--model", model_path("qubit.json"), "eval", "Z <= 0 |"}, true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("offset 7"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  const std::string qubit = model_path("qubit.json");
  EXPECT_EQ(run_cli({"--model", qubit, "eval", "W <= 0"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--model", qubit, "--state", "nobody", "eval", "Z <= 0"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--model", model_path("cnot.json"), "measure", "nope", "povm"}).exit_code, 2);
  // X is not jointly determinate with Z in |0⟩ but that is a valid answer, not an error.
  EXPECT_EQ(run_cli({"--model", qubit, "--state", "ground", "jpd", "Z", "X"}).exit_code, 0);
}

TEST(Cli, MalformedModelFileExitsWithFormatCode) {
  const std::string path = ::testing::TempDir() + "qlogic_bad_model.json";
  FILE* f = std::fopen(path.c_str(), "w");
  ASSERT_NE(f, nullptr);
  std::fputs(R"({"dimension": 2, "operators": {"Z": {"re": [[1, 0]]}}})", f);
  std::fclose(f);
  EXPECT_EQ(run_cli({"--model", path, "eval", "Z <= 0"}).exit_code, 4);
  std::remove(path.c_str());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--model", model_path("bell.json"), "--state", "bell", "jpd", "ZI", "IZ"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EmittedMatricesRoundTripThroughLoader) {
  const CliResult r = run_cli({"--model", model_path("qubit.json"), "eval", "X <= 0 & Y <= 0.5"});
  ASSERT_EQ(r.exit_code, 0);
  const json out = json::parse(r.out);
  const qlogic::ComplexMatrix m = qlogic::matrix_from_json(out.at("truth_projection"), 2);
  // Re-serializing the loaded matrix yields the same text: full precision survives.
  EXPECT_EQ(qlogic::matrix_to_json(m).dump(), out.at("truth_projection").dump());
}

TEST(Cli, ToleranceFlagAndEnvironment) {
  const std::string qubit = model_path("qubit.json");
  EXPECT_EQ(run_cli({"--model", qubit, "--tolerance", "1e-6", "eval", "Z <= 0"}).exit_code, 0);
  // Out-of-range tolerances are rejected as numerical configuration errors.
  EXPECT_EQ(run_cli({"--model", qubit, "--tolerance", "0.5", "eval", "Z <= 0"}).exit_code, 3);
  ::setenv("QLOGIC_TOLERANCE", "0.5", 1);
  EXPECT_EQ(run_cli({"--model", qubit, "eval", "Z <= 0"}).exit_code, 3);
  ::unsetenv("QLOGIC_TOLERANCE");
}

TEST(Cli, PrettyOutputParsesToSameJson) {
  std::vector<std::string> args{"--model", model_path("cnot.json"), "measure", "cnot", "povm"};
  const json compact = json::parse(run_cli(args).out);
  args.insert(args.begin(), {"--output", "pretty"});
  const CliResult pretty = run_cli(args);
  EXPECT_NE(pretty.out.find('\n'), pretty.out.size() - 1);
  EXPECT_EQ(json::parse(pretty.out), compact);
}
