#include <gtest/gtest.h>

#include <algorithm>

#include "support/cli_matrix.hpp"
#include "support/schema_check.hpp"

using namespace nilmult::testing;

TEST(Cli, SpecExamples) {
  auto r = run_cli({"multiplier", "--c", "2", "ES(5;2;expP)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Z(5)^20  [Thm3.14(i)]\n");
  r = run_cli({"verify-e1", "--p", "3", "--c", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Theorem 3.11 holds; M^(2)(E1) = Z(3)^5\n");
  r = run_cli({"witt", "--n", "6", "--d", "2"});
  EXPECT_EQ(r.out, "9\n");
}

TEST(Cli, DefaultClassIsTwo) {
  EXPECT_EQ(run_cli({"multiplier", "ES(5;2;expP)"}).out,
            run_cli({"multiplier", "--c", "2", "ES(5;2;expP)"}).out);
}

TEST(Cli, ExitCodes) {
  auto r = run_cli({"multiplier", "ES(3;1;D8)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("D8 requires p=2"), std::string::npos);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"witt", "--n", "x", "--d", "2"}).code, 2);
  EXPECT_EQ(run_cli({"multiplier", "--c", "0", "ES(3;1;expP)"}).code, 2);
  EXPECT_EQ(run_cli({"verify-e1", "--p", "3", "--c", "4"}).code, 1);
  EXPECT_EQ(run_cli({"hall", "--d", "4", "--max-weight", "12", "--max-basis", "100"}).code, 1);
  EXPECT_EQ(run_cli({"capability", "Ab(3;1,1)"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, CeilingFlagsLiftRefusals) {
  auto r = run_cli({"verify-e1", "--p", "3", "--c", "4", "--max-class", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Theorem 3.11 holds; M^(4)(E1) = Z(3)^15\n");
}

TEST(Cli, GoldenFiles) {
  for (const auto& section : golden_sections())
    EXPECT_EQ(transcript(section.commands), read_file(golden_path(section.name)))
        << section.name;
}

TEST(Cli, JsonMatchesSchemaAndText) {
  const auto schema = load_result_schema();
  for (const auto& section : golden_sections())
    for (auto cmd : section.commands) {
      if (cmd.size() < 2 || cmd[0] == "frobnicate") continue;
      if (std::find(cmd.begin(), cmd.end(), "--json") != cmd.end()) continue;
      const auto text = run_cli(cmd);
      if (text.code != 0) continue;
      cmd.insert(cmd.begin() + 1, "--json");
      const auto js = run_cli(cmd);
      ASSERT_EQ(js.code, 0) << cmd[0];
      const auto doc = nlohmann::json::parse(js.out);
      const auto errs = schema_errors(schema, doc);
      EXPECT_TRUE(errs.empty()) << js.out << (errs.empty() ? "" : errs[0]);
      if (cmd[0] == "multiplier") {
        const auto& m = doc["multiplier"];
        const std::string shown = m["structure"].is_null()
                                      ? "order " + m["order_factored"].get<std::string>()
                                      : m["structure"].get<std::string>();
        EXPECT_EQ(text.out, shown + "  [" + doc["provenance"].get<std::string>() + "]\n");
      } else if (cmd[0] == "witt") {
        EXPECT_EQ(text.out, doc["value"].get<std::string>() + "\n");
      } else if (cmd[0] == "capability") {
        EXPECT_NE(text.out.find(doc["capable"].get<bool>() ? "capable: yes" : "capable: no"),
                  std::string::npos);
      }
    }
}

TEST(SchemaCheck, RejectsMalformedDocuments) {
  const auto schema = load_result_schema();
  using nlohmann::json;
  EXPECT_TRUE(schema_errors(schema, json::parse(R"({"command":"witt","n":6,"d":2,"value":"9"})")).empty());
  EXPECT_FALSE(schema_errors(schema, json::parse(R"({"command":"witt","n":6,"d":2,"value":9})")).empty());
  EXPECT_FALSE(schema_errors(schema, json::parse(R"({"command":"witt","n":6,"d":2})")).empty());
  EXPECT_FALSE(schema_errors(schema, json::parse(R"({"command":"witt","n":6,"d":2,"value":"9","x":1})")).empty());
  EXPECT_FALSE(schema_errors(schema, json::parse(R"({"command":"nope"})")).empty());
}
