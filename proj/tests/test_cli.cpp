#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gotas/cli.hpp"
#include "support/fixtures.hpp"

using namespace gotas;
using namespace gotas::cli;
using gotas::testing::source_path;

namespace {

std::string example() { return source_path("examples/ex-3-24.json"); }

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliTopology, ExampleOpensInCanonicalOrder) {
  auto r = run([](auto& o, auto& e) { return cmd_topology(example(), o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{}\n{a}\n{a, b}\n{c, d}\n{a, c, d}\n{a, b, c, d}\ncount: 6\n");
}

TEST(CliTopology, EmptyBaseAndDiscreteRelation) {
  std::string path = write_temp("empty-base.json", R"({"universe": ["p", "q"], "base": []})");
  auto r = run([&](auto& o, auto& e) { return cmd_topology(path, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{}\n{p, q}\ncount: 2\n");

  auto d = run([](auto& o, auto& e) { return cmd_topology(source_path("examples/discrete.json"), o, e); });
  EXPECT_EQ(d.code, kOk);
  EXPECT_NE(d.out.find("count: 16"), std::string::npos);
}

TEST(CliTopology, OrderViolationIsInputError) {
  std::string path = write_temp("antisym.json", R"({"universe": ["a", "b"], "base": [],
    "order": [["a", "b"], ["b", "a"]]})");
  auto r = run([&](auto& o, auto& e) { return cmd_topology(path, o, e); });
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("antisymmetry"), std::string::npos);
  EXPECT_NE(r.err.find("(a, b)"), std::string::npos) << r.err;
}

TEST(CliDocument, ErrorsNameTheField) {
  struct Case {
    const char* body;
    const char* needle;
  } cases[] = {
      {R"({"universe": ["a"], "base": [["z"]]})", "base[0][0]"},
      {R"({"universe": ["a"], "base": [], "order": [["a", "q"]]})", "order[0][1]"},
      {R"({"universe": ["a"], "base": [], "extra": 1})", "extra: unknown field"},
      {R"({"universe": ["a"]})", "exactly one"},
      {R"({"universe": ["a"], "base": [], "relation": []})", "exactly one"},
      {R"({"universe": ["a", "a"], "base": []})", "universe"},
      {"{\n\"universe\": [\"a\"],\n  \"base\": [,]\n}", "line 3"},
      {R"({"universe": ["a"], "relation": [["a"]]})", "relation[0]"},
  };
  int k = 0;
  for (const auto& c : cases) {
    std::string path = write_temp("doc" + std::to_string(k++) + ".json", c.body);
    auto r = run([&](auto& o, auto& e) { return cmd_topology(path, o, e); });
    EXPECT_EQ(r.code, kInputError) << c.body;
    EXPECT_NE(r.err.find(c.needle), std::string::npos) << r.err;
  }
  auto missing = run([](auto& o, auto& e) { return cmd_topology("/nonexistent/space.json", o, e); });
  EXPECT_EQ(missing.code, kInputError);
}

TEST(CliAnalyze, BetaDecRow) {
  AnalyzeOptions opts{.set = "a,c", .family = Family::Beta, .direction = Direction::Dec};
  auto r = run([&](auto& o, auto& e) { return cmd_analyze(example(), opts, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream lines(r.out);
  std::string first, header, row, extra;
  std::getline(lines, first);
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(first, "A = {a, c}");
  EXPECT_EQ(header.rfind("family", 0), 0u);
  EXPECT_FALSE(std::getline(lines, extra));
  std::istringstream cells(row);
  std::string family, direction;
  cells >> family >> direction;
  EXPECT_EQ(family, "Beta");
  EXPECT_EQ(direction, "Dec");
  EXPECT_NE(row.find("{a, c}  {a, b, c}  {b}"), std::string::npos) << row;
  EXPECT_NE(row.find("2/3"), std::string::npos);
  EXPECT_NE(row.find("rough"), std::string::npos);
}

TEST(CliAnalyze, AllRowsAndEmptySet) {
  auto all = run([](auto& o, auto& e) { return cmd_analyze(example(), {.set = "a, c"}, o, e); });
  ASSERT_EQ(all.code, kOk);
  EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 12);

  auto empty = run([](auto& o, auto& e) {
    return cmd_analyze(example(), {.set = "", .format = Format::json}, o, e);
  });
  ASSERT_EQ(empty.code, kOk);
  auto j = nlohmann::json::parse(empty.out);
  EXPECT_TRUE(j["set"].empty());
  ASSERT_EQ(j["rows"].size(), 10u);
  for (const auto& row : j["rows"]) {
    EXPECT_TRUE(row["lower"].empty());
    EXPECT_TRUE(row["upper"].empty());
    EXPECT_EQ(row["accuracy"]["numerator"], 1);
    EXPECT_EQ(row["accuracy"]["denominator"], 1);
    EXPECT_TRUE(row["exact"].get<bool>());
  }
}

TEST(CliAnalyze, JsonMatchesTable) {
  AnalyzeOptions table{.set = "a,c"};
  AnalyzeOptions json{.set = "a,c", .format = Format::json};
  auto t = run([&](auto& o, auto& e) { return cmd_analyze(example(), table, o, e); });
  auto js = run([&](auto& o, auto& e) { return cmd_analyze(example(), json, o, e); });
  ASSERT_EQ(t.code, kOk);
  ASSERT_EQ(js.code, kOk);

  auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["set"], (nlohmann::json{"a", "c"}));
  Gotas g = build_space(load_document(example()));
  std::vector<std::vector<std::string>> cells{report_columns()};
  for (const auto& row : doc["rows"]) {
    auto sub = [&](const char* key) { return subset_of(g.universe(), row[key].get<std::vector<std::string>>()); };
    Accuracy acc(row["accuracy"]["numerator"].get<std::int64_t>(),
                 row["accuracy"]["denominator"].get<std::int64_t>());
    cells.push_back({row["family"], row["direction"], format_subset(sub("lower")),
                     format_subset(sub("upper")), format_subset(sub("boundary")),
                     format_subset(sub("positive")), format_subset(sub("negative")),
                     format_accuracy(acc), row["exact"].get<bool>() ? "exact" : "rough"});
  }
  std::ostringstream rebuilt;
  rebuilt << "A = {a, c}\n";
  write_table(rebuilt, cells);
  EXPECT_EQ(rebuilt.str(), t.out);
}

TEST(CliAnalyze, GammaIncAndLiteralExactness) {
  AnalyzeOptions opts{.set = "a,c", .family = Family::Gamma, .direction = Direction::Inc,
                      .format = Format::json};
  auto r = run([&](auto& o, auto& e) { return cmd_analyze(example(), opts, o, e); });
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["lower"], (nlohmann::json{"a", "c"}));
  EXPECT_EQ(j["rows"][0]["upper"], (nlohmann::json{"a", "b", "c", "d"}));

  opts.set = "a,b,c,d";
  opts.literal_gamma_exactness = true;
  auto full = run([&](auto& o, auto& e) { return cmd_analyze(example(), opts, o, e); });
  EXPECT_TRUE(nlohmann::json::parse(full.out)["rows"][0]["exact"].get<bool>());
}

TEST(CliAnalyze, UnknownLabelIsInputError) {
  auto r = run([](auto& o, auto& e) { return cmd_analyze(example(), {.set = "a,z"}, o, e); });
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("'z'"), std::string::npos);
}

TEST(CliCheck, ExampleSpacePasses) {
  CheckCommandOptions opts{.exhaustive = true};
  auto r = run([&](auto& o, auto& e) { return cmd_check(example(), opts, o, e); });
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("summary: 26 propositions, 0 failed"), std::string::npos);
  EXPECT_NE(r.out.find("instances=512"), std::string::npos);
}

TEST(CliCheck, CorruptedGammaUpperFails) {
  CheckCommandOptions opts{.exhaustive = true, .format = Format::json,
                           .corrupt_gamma_upper = true};
  auto r = run([&](auto& o, auto& e) { return cmd_check(example(), opts, o, e); });
  EXPECT_EQ(r.code, kCheckFailed);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["mode"], "exhaustive");
  bool sandwich_failed = false;
  for (const auto& p : j["propositions"]) {
    if (p["id"] == "sandwich") {
      sandwich_failed = !p["passed"].get<bool>();
      ASSERT_FALSE(p["witnesses"].empty());
      EXPECT_EQ(p["witnesses"][0]["space"], example());
    }
  }
  EXPECT_TRUE(sandwich_failed);
}

TEST(CliCheck, LargeUniverseNeedsSampling) {
  std::string path = write_temp("six.json", R"({"universe": ["a","b","c","d","e","f"],
    "base": [["a"], ["b", "c"]]})");
  auto ex = run([&](auto& o, auto& e) {
    return cmd_check(path, CheckCommandOptions{.exhaustive = true}, o, e);
  });
  EXPECT_EQ(ex.code, kInputError);
  EXPECT_NE(ex.err.find("exhaustive"), std::string::npos);

  auto sampled = run([&](auto& o, auto& e) {
    return cmd_check(path, CheckCommandOptions{.samples = 50, .format = Format::json}, o, e);
  });
  ASSERT_NE(sampled.code, kInputError) << sampled.err;
  auto j = nlohmann::json::parse(sampled.out);
  EXPECT_EQ(j["mode"], "sampled");
  EXPECT_EQ(j["propositions"][0]["instances"], 100);
}

TEST(CliOracleDiff, ExampleAndSingleton) {
  auto r = run([](auto& o, auto& e) { return cmd_oracle_diff(example(), o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0 mismatches / 64 comparisons\n");
  auto s = run([](auto& o, auto& e) { return cmd_oracle_diff(source_path("examples/singleton.json"), o, e); });
  EXPECT_EQ(s.code, kOk);
  EXPECT_EQ(s.out, "0 mismatches / 8 comparisons\n");
}

TEST(CliOracleDiff, EnvironmentCap) {
  ::setenv("GOTAS_ORACLE_CAP", "3", 1);
  auto r = run([](auto& o, auto& e) { return cmd_oracle_diff(example(), o, e); });
  ::unsetenv("GOTAS_ORACLE_CAP");
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("3"), std::string::npos);
}

TEST(CliParsing, FamilyDirectionAndLabels) {
  EXPECT_EQ(parse_family("Gamma"), Family::Gamma);
  EXPECT_EQ(parse_family("pre"), Family::P);
  EXPECT_EQ(parse_family("b"), Family::Beta);
  EXPECT_FALSE(parse_family("delta"));
  EXPECT_EQ(parse_direction("DEC"), Direction::Dec);
  EXPECT_FALSE(parse_direction("up"));
  EXPECT_EQ(split_labels(" a , c,"), (std::vector<std::string>{"a", "c"}));
  EXPECT_TRUE(split_labels("  ").empty());
}
