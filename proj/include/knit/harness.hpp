#pragma once

/**
 * Experiment drivers behind the `knit` command line tool. Each command
 * returns a Report: JSON-lines records plus the process exit status
 * (0 = property holds, 1 = it fails, 2 = input error, raised as InputError).
 */

#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knit/constructions.hpp"
#include "knit/enumerate.hpp"
#include "knit/graph.hpp"
#include "knit/graph_io.hpp"
#include "knit/knit_solver.hpp"
#include "knit/proof_engine.hpp"

namespace knit {

inline constexpr const char* kReportSchema = "knit-report/1";

/// Keys holding wall-clock measurements; everything else is deterministic.
inline const std::vector<std::string> kTimingFields = {"elapsed_ms", "heuristic_ms", "exact_ms", "speedup"};

struct IntRange {
  int lo = 0;
  int hi = -1;

  auto empty() const -> bool { return hi < lo; }
  static auto single(int v) -> IntRange { return {v, v}; }
};

/// "7", "13..16", or "" (empty range).
inline auto parse_range(const std::string& text) -> IntRange {
  if (text.empty()) return {};
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad range '" + text + "'");
    }
    if (used != s.size()) throw InputError("bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) return IntRange::single(to_int(text));
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

enum class SamplingPolicy { Exhaustive, Sampled };

struct ExperimentConfig {
  IntRange n{13, 13};
  IntRange k{5, 5};
  int m = 1;
  int samples = 20;         ///< graphs per (n, k), or per δ in bench
  std::uint64_t seed = 1;
  std::uint64_t cap = 100000;  ///< instance cap; exhaustive only when C(n,k)·Bell(k) fits
  int jobs = 1;
  bool heuristic = false;   ///< run the constructive engine before the exact solver
  IntRange delta{6, 10};    ///< bench only

  auto validate() const -> void {
    if (n.empty()) throw InputError("empty n range");
    if (k.empty()) throw InputError("empty k range");
    if (samples < 1) throw InputError("--samples must be at least 1");
    if (cap < 1) throw InputError("--cap must be at least 1");
    if (jobs < 1) throw InputError("--jobs must be at least 1");
  }

  auto policy(int order, int terminals) const -> SamplingPolicy {
    const std::uint64_t total = binomial(order, terminals) * partition_count(terminals);
    return total <= cap ? SamplingPolicy::Exhaustive : SamplingPolicy::Sampled;
  }
};

struct Report {
  std::vector<nlohmann::json> records;
  int exit_code = 0;

  auto to_jsonl() const -> std::string {
    std::string out;
    for (const auto& r : records) out += r.dump() + "\n";
    return out;
  }
};

// ---------------------------------------------------------------------------
// Serialization helpers

inline auto to_json(VertexSet s) -> nlohmann::json { return s.to_vector(); }

inline auto to_json(const Knit& k) -> nlohmann::json {
  auto out = nlohmann::json::array();
  for (auto b : k.branches) out.push_back(to_json(b));
  return out;
}

inline auto to_json(const Witness& w) -> nlohmann::json {
  auto parts = nlohmann::json::array();
  for (auto p : w.partition.parts) parts.push_back(to_json(p));
  return {{"terminals", to_json(w.terminals)}, {"partition", parts}};
}

inline auto vertex_set_from_json(const nlohmann::json& j) -> VertexSet {
  VertexSet s;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex id out of range in JSON");
    s.insert(v);
  }
  return s;
}

inline auto witness_from_json(const nlohmann::json& j) -> Witness {
  Witness w;
  w.terminals = vertex_set_from_json(j.at("terminals"));
  for (const auto& p : j.at("partition")) w.partition.parts.push_back(vertex_set_from_json(p));
  return w;
}

/// "0,3|1|4" -> {{0,3},{1},{4}}.
inline auto parse_parts(const std::string& text) -> SetPartition {
  SetPartition out;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    VertexSet s;
    std::stringstream items(block);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw InputError("empty vertex in --parts '" + text + "'");
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw InputError("bad vertex '" + item + "' in --parts");
      }
      if (used != item.size() || v < 0 || v >= kMaxVertices) throw InputError("bad vertex '" + item + "' in --parts");
      if (s.contains(v)) throw InputError("vertex repeated in --parts");
      s.insert(v);
    }
    out.parts.push_back(s);
  }
  if (!out.is_valid() || out.parts.empty()) throw InputError("--parts needs nonempty disjoint blocks, e.g. 0,3|1|4");
  return out;
}

inline auto round_ms(double ms) -> double { return static_cast<double>(static_cast<long long>(ms * 1000.0)) / 1000.0; }

class Stopwatch {
 public:
  auto ms() const -> double {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline auto graph_record(const char* kind, const Graph& g) -> nlohmann::json {
  return {{"schema", kReportSchema},
          {"kind", kind},
          {"graph", to_graph6(g)},
          {"graph_hash", graph_hash(g)},
          {"n", g.order()},
          {"delta", g.min_degree()}};
}

// ---------------------------------------------------------------------------
// Engines

struct EngineOutcome {
  std::optional<Knit> knit;
  std::string engine;  ///< "heuristic", "exact", or "none"
  std::vector<MoveRecord> trace;
};

/// Constructive search first when asked, exact search otherwise or as fallback.
inline auto run_engines(const Graph& g, const SetPartition& parts, bool heuristic) -> EngineOutcome {
  EngineOutcome out;
  if (heuristic) {
    auto r = constructive_knit(KnitInstance{g, parts});
    out.trace = r.trace;
    if (r.solved()) {
      out.knit = r.knit();
      out.engine = "heuristic";
      return out;
    }
  }
  out.knit = solve_knit(g, parts.parts);
  out.engine = out.knit ? "exact" : "none";
  return out;
}

// ---------------------------------------------------------------------------
// Commands

/// (k,m)-knit check of each graph. Exit 1 if any graph fails.
inline auto cmd_check(const std::vector<Graph>& graphs, int k, int m, SweepOptions opts = {}) -> Report {
  Report rep;
  for (const auto& g : graphs) {
    if (k < 1 || k > g.order()) throw InputError("--k must satisfy 1 <= k <= n (n = " + std::to_string(g.order()) + ")");
    if (m < 1 || m > k) throw InputError("--m must satisfy 1 <= m <= k");
    Stopwatch clock;
    auto res = sweep_km_knit(g, k, m, opts);
    auto rec = graph_record("check", g);
    rec["k"] = k;
    rec["m"] = m;
    rec["verdict"] = res.ok;
    rec["engine"] = "exact";
    rec["instances"] = res.instances;
    rec["witness"] = res.witness ? to_json(*res.witness) : nlohmann::json(nullptr);
    rec["elapsed_ms"] = round_ms(clock.ms());
    if (!res.ok) rep.exit_code = 1;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

/// One instance. Exit 1 when no knit exists.
inline auto cmd_solve(const Graph& g, const SetPartition& parts, bool heuristic, bool with_trace = false) -> Report {
  KnitInstance{g, parts}.validate();
  Stopwatch clock;
  auto out = run_engines(g, parts, heuristic);
  auto rec = graph_record("solve", g);
  Witness w{parts.ground(), parts};
  rec["k"] = w.terminals.size();
  rec["instance"] = to_json(w);
  rec["verdict"] = out.knit.has_value();
  rec["engine"] = out.engine;
  rec["certificate"] = out.knit ? to_json(*out.knit) : nlohmann::json(nullptr);
  if (with_trace) {
    auto lines = nlohmann::json::array();
    for (const auto& mv : out.trace) lines.push_back(format_move(mv));
    rec["trace"] = lines;
  }
  rec["elapsed_ms"] = round_ms(clock.ms());
  Report rep;
  rep.exit_code = out.knit ? 0 : 1;
  rep.records.push_back(std::move(rec));
  return rep;
}

/// Seed of the i-th sampled graph for (n, k); stable across runs and job counts.
inline auto graph_seed(std::uint64_t base, int n, int k, int i) -> std::uint64_t {
  std::uint64_t h = base * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::uint64_t>(n) * 0xbf58476d1ce4e5b9ULL + static_cast<std::uint64_t>(k) * 0x94d049bb133111ebULL;
  return h + static_cast<std::uint64_t>(i);
}

/// Samples graphs with δ >= ⌈(n+k-2)/2⌉ and checks k-knittedness. Halts at
/// the first failing graph.
inline auto cmd_verify_theorem(const ExperimentConfig& cfg) -> Report {
  cfg.validate();
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
      if (k < 5) throw InputError("verify-theorem: hypothesis k >= 5 violated (k = " + std::to_string(k) + ")");
      if (n < 2 * k + 3)
        throw InputError("verify-theorem: hypothesis n >= 2k+3 violated (n = " + std::to_string(n) +
                         ", k = " + std::to_string(k) + ")");
      if (n > kMaxVertices) throw InputError("verify-theorem: n must be at most 64");
    }

  Report rep;
  int graphs = 0, failures = 0;
  for (int n = cfg.n.lo; n <= cfg.n.hi && failures == 0; ++n) {
    for (int k = cfg.k.lo; k <= cfg.k.hi && failures == 0; ++k) {
      const int d = min_degree_threshold(n, k);
      const auto policy = cfg.policy(n, k);
      for (int i = 0; i < cfg.samples && failures == 0; ++i) {
        const auto seed = graph_seed(cfg.seed, n, k, i);
        const Graph g = random_min_degree_graph(n, d, seed);
        Stopwatch clock;
        std::atomic<std::uint64_t> heuristic_solved{0};
        auto on_knit = [&](std::span<const VertexSet> blocks, const Knit&) {
          if (!cfg.heuristic) return;
          auto r = constructive_knit(KnitInstance{g, SetPartition{{blocks.begin(), blocks.end()}}});
          if (r.solved()) heuristic_solved.fetch_add(1);
        };
        SweepResult res;
        if (policy == SamplingPolicy::Exhaustive) {
          res = sweep_km_knit(g, k, 1, {cfg.jobs}, on_knit);
        } else {
          auto inst = sample_instances(g.vertices(), k, cfg.cap, seed);
          res = sweep_instances(g, inst, {cfg.jobs}, on_knit);
        }
        auto rec = graph_record("verify-theorem", g);
        rec["k"] = k;
        rec["threshold"] = d;
        rec["seed"] = seed;
        rec["policy"] = policy == SamplingPolicy::Exhaustive ? "exhaustive" : "sampled";
        rec["verdict"] = res.ok;
        rec["engine"] = "exact";
        rec["instances"] = res.instances;
        rec["witness"] = res.witness ? to_json(*res.witness) : nlohmann::json(nullptr);
        if (cfg.heuristic) rec["heuristic_solved"] = heuristic_solved.load();
        rec["elapsed_ms"] = round_ms(clock.ms());
        ++graphs;
        if (!res.ok) ++failures;
        rep.records.push_back(std::move(rec));
      }
    }
  }
  rep.records.push_back({{"schema", kReportSchema}, {"kind", "summary"}, {"command", "verify-theorem"},
                         {"graphs", graphs}, {"failures", failures}});
  rep.exit_code = failures == 0 ? 0 : 1;
  return rep;
}

/// Sharpness rows. With no k range, each n uses k = 5..⌊(n-3)/2⌋.
inline auto cmd_sharpness(IntRange ns, std::optional<IntRange> ks) -> Report {
  Report rep;
  if (ns.empty()) return rep;
  for (int n = ns.lo; n <= ns.hi; ++n) {
    IntRange kr = ks ? *ks : IntRange{5, (n - 3) / 2};
    for (int k = kr.lo; k <= kr.hi; ++k) {
      const auto w = sharpness_graph(n, k);
      const int delta = w.graph.min_degree();
      const int expected = sharpness_min_degree(n, k);
      const int threshold = min_degree_threshold(n, k);
      const bool solvable = solve_knit(w.instance).has_value();
      const bool ok = delta == expected && delta < threshold && !solvable;
      nlohmann::json rec = graph_record("sharpness", w.graph);
      rec["k"] = k;
      rec["a_size"] = w.a_side.size();
      rec["b_size"] = w.b_mid.size();
      rec["c_size"] = w.c_side.size();
      rec["expected_delta"] = expected;
      rec["threshold"] = threshold;
      rec["gap"] = threshold - delta;
      rec["witness"] = to_json(Witness{w.instance.terminals(), w.instance.partition});
      rec["witness_solvable"] = solvable;
      rec["verdict"] = ok;
      if (!w.warning.empty()) rec["warning"] = w.warning;
      if (!ok) rep.exit_code = 1;
      rep.records.push_back(std::move(rec));
    }
  }
  return rep;
}

/// Heuristic-versus-exact comparison across minimum degrees. Each δ row
/// aggregates `samples` graphs with minimum degree exactly δ; a final row
/// does the same for K_n.
inline auto cmd_bench(const ExperimentConfig& cfg) -> Report {
  cfg.validate();
  if (cfg.delta.empty()) throw InputError("empty --delta range");
  const int n = cfg.n.lo, k = cfg.k.lo;
  if (k < 1 || k >= n || n > kMaxVertices) throw InputError("bench: need 1 <= k < n <= 64");
  if (cfg.delta.lo < 0 || cfg.delta.hi >= n) throw InputError("bench: delta must lie in 0..n-1");

  struct Tally {
    std::uint64_t instances = 0, heuristic = 0, fallback = 0, unsolvable = 0;
    double heuristic_ms = 0, exact_ms = 0;
  };
  auto measure = [&](const Graph& g, std::uint64_t seed, Tally& t) {
    std::vector<SetPartition> inst;
    if (cfg.policy(n, k) == SamplingPolicy::Exhaustive) {
      for_each_ksubset(g.vertices(), k, [&](VertexSet s) {
        for_each_partition(s, 1, [&](std::span<const VertexSet> b) { inst.push_back(SetPartition{{b.begin(), b.end()}}); });
      });
    } else {
      inst = sample_instances(g.vertices(), k, cfg.cap, seed);
    }
    for (const auto& p : inst) {
      ++t.instances;
      Stopwatch h;
      auto r = constructive_knit(KnitInstance{g, p});
      t.heuristic_ms += h.ms();
      Stopwatch e;
      auto exact = solve_knit(g, p.parts);
      t.exact_ms += e.ms();
      if (r.solved())
        ++t.heuristic;
      else if (exact)
        ++t.fallback;
      else
        ++t.unsolvable;
    }
  };
  auto row = [&](const std::string& label, int delta, const Tally& t, int graphs) {
    nlohmann::json rec = {{"schema", kReportSchema}, {"kind", "bench"}, {"label", label}, {"n", n}, {"k", k}};
    rec["delta"] = delta;
    rec["threshold"] = min_degree_threshold(n, k);
    rec["graphs"] = graphs;
    rec["instances"] = t.instances;
    rec["heuristic_solved"] = t.heuristic;
    rec["fallback_solved"] = t.fallback;
    rec["unsolvable"] = t.unsolvable;
    rec["heuristic_rate"] = t.instances ? static_cast<double>(t.heuristic) / static_cast<double>(t.instances) : 0.0;
    rec["coverage"] = t.instances ? static_cast<double>(t.heuristic + t.fallback) / static_cast<double>(t.instances) : 0.0;
    rec["heuristic_ms"] = round_ms(t.heuristic_ms);
    rec["exact_ms"] = round_ms(t.exact_ms);
    rec["speedup"] = t.heuristic_ms > 0 ? round_ms(t.exact_ms / t.heuristic_ms) : 0.0;
    return rec;
  };

  Report rep;
  for (int d = cfg.delta.lo; d <= cfg.delta.hi; ++d) {
    Tally t;
    for (int i = 0; i < cfg.samples; ++i) {
      const auto seed = graph_seed(cfg.seed, n, d, i);
      measure(random_exact_min_degree_graph(n, d, seed), seed, t);
    }
    rep.records.push_back(row("random", d, t, cfg.samples));
  }
  Tally t;
  measure(named_family("complete", {n}), cfg.seed, t);
  rep.records.push_back(row("complete", n - 1, t, 1));
  return rep;
}

/// Fixed-width table of the deterministic fields, for --summary.
inline auto summary_table(const Report& rep) -> std::string {
  std::ostringstream out;
  for (const auto& r : rep.records) {
    const std::string kind = r.value("kind", "");
    out << std::left << std::setw(15) << kind;
    for (const char* key : {"label", "n", "k", "m", "delta", "threshold", "policy", "instances", "verdict", "engine",
                            "heuristic_rate", "unsolvable", "graphs", "failures"}) {
      if (!r.contains(key)) continue;
      out << ' ' << key << '=' << (r[key].is_string() ? r[key].get<std::string>() : r[key].dump());
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace knit
