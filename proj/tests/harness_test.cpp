#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "gtest/gtest.h"
#include "knit/constructions.hpp"
#include "knit/harness.hpp"

namespace knit {
namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
auto run_cli(const std::string& args) -> RunResult {
  std::string cmd = std::string(KNIT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

auto sample(const std::string& name) -> std::string { return std::string(KNIT_SAMPLES_DIR) + "/" + name; }

auto lines_of(const std::string& text) -> std::vector<nlohmann::json> {
  std::vector<nlohmann::json> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    out.push_back(nlohmann::json::parse(text.substr(pos, nl - pos)));
    pos = nl == std::string::npos ? text.size() : nl + 1;
  }
  return out;
}

auto strip_timing(nlohmann::json r) -> nlohmann::json {
  for (const auto& f : kTimingFields) r.erase(f);
  return r;
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("13").lo, 13);
  auto r = parse_range("14..16");
  EXPECT_EQ(r.lo, 14);
  EXPECT_EQ(r.hi, 16);
  EXPECT_TRUE(parse_range("").empty());
  EXPECT_TRUE(parse_range("16..14").empty());
  EXPECT_THROW(parse_range("1..x"), InputError);
  EXPECT_THROW(parse_range("7a"), InputError);
}

TEST(ParseParts, Forms) {
  auto p = parse_parts("0,3|1|4");
  EXPECT_EQ(p.parts, (std::vector<VertexSet>{{0, 3}, {1}, {4}}));
  EXPECT_THROW(parse_parts("0,3|3"), InputError);
  EXPECT_THROW(parse_parts("0,,1"), InputError);
  EXPECT_THROW(parse_parts("a"), InputError);
}

TEST(CmdCheck, CompleteGraphHolds) {
  auto rep = cmd_check({named_family("complete", {13})}, 5, 1, {4});
  ASSERT_EQ(rep.records.size(), 1U);
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(rep.records[0]["verdict"].get<bool>());
  EXPECT_EQ(rep.records[0]["instances"].get<std::uint64_t>(), 66924U);
  EXPECT_TRUE(rep.records[0]["witness"].is_null());
}

TEST(CmdCheck, SharpnessGraphFailsWithReplayableWitness) {
  auto w = sharpness_graph(13, 5);
  auto rep = cmd_check({w.graph}, 5, 1, {4});
  EXPECT_EQ(rep.exit_code, 1);
  const auto& rec = rep.records[0];
  EXPECT_FALSE(rec["verdict"].get<bool>());
  auto witness = witness_from_json(rec["witness"]);
  EXPECT_FALSE(solve_knit(w.graph, witness.partition.parts).has_value());
  EXPECT_EQ(witness.terminals.size(), 5);
  EXPECT_THROW(cmd_check({w.graph}, 14, 1), InputError);
  EXPECT_THROW(cmd_check({w.graph}, 5, 6), InputError);
}

TEST(CmdSolve, CertificateAndTrace) {
  auto rep = cmd_solve(named_family("cycle", {6}), parse_parts("0,3|1|4"), false);
  EXPECT_EQ(rep.exit_code, 1);
  EXPECT_EQ(rep.records[0]["engine"], "none");
  EXPECT_TRUE(rep.records[0]["certificate"].is_null());

  auto ok = cmd_solve(named_family("cycle", {6}), parse_parts("0,2|3"), true, true);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.records[0]["engine"], "heuristic");
  EXPECT_EQ(ok.records[0]["certificate"], (nlohmann::json{{0, 1, 2}, {3}}));
  EXPECT_TRUE(ok.records[0]["trace"].is_array());
  EXPECT_THROW(cmd_solve(named_family("cycle", {6}), parse_parts("0|9"), false), InputError);
}

TEST(CmdVerifyTheorem, GuardsHypotheses) {
  ExperimentConfig cfg;
  cfg.n = IntRange::single(12);
  try {
    cmd_verify_theorem(cfg);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 2k+3"), std::string::npos);
  }
  cfg.n = IntRange::single(13);
  cfg.k = IntRange::single(4);
  EXPECT_THROW(cmd_verify_theorem(cfg), InputError);
  cfg.k = IntRange::single(5);
  cfg.samples = 0;
  EXPECT_THROW(cmd_verify_theorem(cfg), InputError);
}

TEST(CmdVerifyTheorem, SampledRunIsDeterministic) {
  ExperimentConfig cfg;
  cfg.n = parse_range("14..15");
  cfg.samples = 2;
  cfg.cap = 300;
  cfg.seed = 7;
  cfg.heuristic = true;
  cfg.jobs = 1;
  auto a = cmd_verify_theorem(cfg);
  cfg.jobs = 3;
  auto b = cmd_verify_theorem(cfg);
  EXPECT_EQ(a.exit_code, 0);
  ASSERT_EQ(a.records.size(), 5U);
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(strip_timing(a.records[i]), strip_timing(b.records[i]));
  for (std::size_t i = 0; i + 1 < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i]["policy"], "sampled");
    EXPECT_EQ(a.records[i]["instances"].get<int>(), 300);
    EXPECT_GE(a.records[i]["delta"].get<int>(), a.records[i]["threshold"].get<int>());
    EXPECT_LE(a.records[i]["heuristic_solved"].get<int>(), 300);
  }
  EXPECT_EQ(a.records.back()["kind"], "summary");
  EXPECT_EQ(a.records.back()["failures"], 0);
}

TEST(CmdSharpness, RowsAndEmptyRange) {
  auto rep = cmd_sharpness(parse_range("13..16"), IntRange::single(5));
  ASSERT_EQ(rep.records.size(), 4U);
  EXPECT_EQ(rep.exit_code, 0);
  const int gaps[] = {1, 2, 1, 2};
  for (int i = 0; i < 4; ++i) {
    const auto& r = rep.records[i];
    EXPECT_TRUE(r["verdict"].get<bool>());
    EXPECT_FALSE(r["witness_solvable"].get<bool>());
    EXPECT_EQ(r["delta"], r["expected_delta"]);
    EXPECT_EQ(r["gap"].get<int>(), gaps[i]);
  }
  auto empty = cmd_sharpness(parse_range(""), std::nullopt);
  EXPECT_TRUE(empty.records.empty());
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_EQ(cmd_sharpness(parse_range("13"), std::nullopt).records.size(), 1U);
}

TEST(CmdBench, FieldsAndCompleteRow) {
  ExperimentConfig cfg;
  cfg.n = IntRange::single(13);
  cfg.delta = parse_range("7..8");
  cfg.samples = 1;
  cfg.cap = 200;
  auto rep = cmd_bench(cfg);
  ASSERT_EQ(rep.records.size(), 3U);
  for (const auto& r : rep.records) {
    for (const char* f : {"instances", "heuristic_solved", "fallback_solved", "unsolvable", "heuristic_rate",
                          "coverage", "heuristic_ms", "exact_ms", "speedup"})
      EXPECT_TRUE(r.contains(f)) << f;
    EXPECT_EQ(r["instances"].get<int>(), 200);
  }
  EXPECT_EQ(rep.records[1]["unsolvable"], 0);
  EXPECT_DOUBLE_EQ(rep.records[1]["coverage"].get<double>(), 1.0);
  const auto& complete = rep.records.back();
  EXPECT_EQ(complete["label"], "complete");
  EXPECT_EQ(complete["fallback_solved"], 0);
  EXPECT_EQ(complete["heuristic_solved"], 200);
}

TEST(Cli, CheckExitCodes) {
  auto ok = run_cli("check --k 5 --jobs 4 " + sample("k13.g6"));
  EXPECT_EQ(ok.status, 0);
  auto recs = lines_of(ok.out);
  ASSERT_EQ(recs.size(), 1U);
  EXPECT_EQ(recs[0]["schema"], kReportSchema);

  auto bad = run_cli("check --k 5 --jobs 4 " + sample("sharpness_13_5.g6"));
  EXPECT_EQ(bad.status, 1);
  auto rec = lines_of(bad.out).at(0);
  auto w = witness_from_json(rec["witness"]);
  EXPECT_FALSE(solve_knit(sharpness_graph(13, 5).graph, w.partition.parts).has_value());

  EXPECT_EQ(run_cli("check --k 5 " + sample("truncated.g6")).status, 2);
  EXPECT_EQ(run_cli("check --k 5 /nonexistent/file.g6").status, 2);
  EXPECT_EQ(run_cli("check").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
}

TEST(Cli, StdinAndEdgeList) {
  auto r = run_cli("check --k 4 - < " + sample("c6.g6"));
  EXPECT_EQ(r.status, 1);
  auto e = run_cli("check --k 2 --format edgelist " + sample("c6.edgelist"));
  EXPECT_EQ(e.status, 0);
  auto s = run_cli("solve --format edgelist --parts '0,3|1|4' " + sample("c6.edgelist"));
  EXPECT_EQ(s.status, 1);
  EXPECT_EQ(run_cli("solve --parts '0,3' --family cycle:6").status, 0);
}

TEST(Cli, SharpnessAndVerifyThroughFiles) {
  auto r = run_cli("sharpness --n 13..14 --k 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines_of(r.out).size(), 2U);
  EXPECT_EQ(run_cli("sharpness --n ''").out, "");
  EXPECT_EQ(run_cli("verify-theorem --n 12 --k 5").status, 2);

  std::string out = ::testing::TempDir() + "knit_verify.jsonl";
  auto v = run_cli("verify-theorem --n 14 --samples 1 --cap 100 --seed 3 --out " + out + " --summary");
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, "");
  std::FILE* f = std::fopen(out.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::fclose(f);
}

}  // namespace
}  // namespace knit
