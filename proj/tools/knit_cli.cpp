// knit: command line front end for the knit solver and the verification
// experiments. Reports are JSON lines on stdout (or --out); --summary adds a
// plain table on stderr. Exit status: 0 holds, 1 fails, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knit/graph_io.hpp"
#include "knit/harness.hpp"

namespace {

struct Common {
  std::string input = "-";
  std::string format = "graph6";
  std::string family;
  std::string out;
  bool summary = false;
};

auto split_family(const std::string& text) -> std::pair<std::string, std::vector<int>> {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw knit::InputError("bad family parameter '" + item + "'");
      }
    }
  }
  return {name, params};
}

auto load_graphs(const Common& c) -> std::vector<knit::Graph> {
  if (!c.family.empty()) {
    auto [name, params] = split_family(c.family);
    return {knit::named_family(name, params)};
  }
  std::ifstream file;
  std::istream* in = &std::cin;
  if (c.input != "-") {
    file.open(c.input);
    if (!file) throw knit::InputError("cannot open " + c.input);
    in = &file;
  }
  if (c.format == "edgelist") return {knit::read_edge_list(*in)};
  auto graphs = knit::read_graph6_stream(*in);
  if (graphs.empty()) throw knit::InputError("no graphs in input");
  return graphs;
}

auto emit(const knit::Report& rep, const Common& c) -> int {
  if (c.out.empty()) {
    std::cout << rep.to_jsonl();
  } else {
    std::ofstream file(c.out);
    if (!file) throw knit::InputError("cannot write " + c.out);
    file << rep.to_jsonl();
  }
  if (c.summary) std::cerr << knit::summary_table(rep);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide knits, check k-knittedness, and run the minimum-degree experiments"};
  app.require_subcommand(1);

  Common common;
  int k = 5, m = 1, jobs = 1, samples = 20;
  std::uint64_t seed = 1, cap = 100000;
  std::string n_range = "13", k_range, delta_range = "6..10", parts;
  bool heuristic = false, trace = false;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the JSON-lines report here instead of stdout");
    sub->add_flag("--summary", common.summary, "Print a human-readable table on stderr");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "Graph file, or - for standard input");
    sub->add_option("--format", common.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--family", common.family, "Named graph instead of input, e.g. complete:13 or sharpness:13,5");
  };

  auto* check = app.add_subcommand("check", "Test (k,m)-knit for every input graph");
  add_input(check);
  add_output(check);
  check->add_option("--k", k, "Terminal set size")->required();
  check->add_option("--m", m, "Minimum number of blocks (1 = k-knitted)");
  check->add_option("--jobs", jobs, "Worker threads");

  auto* solve = app.add_subcommand("solve", "Solve one knit instance");
  add_input(solve);
  add_output(solve);
  solve->add_option("--parts", parts, "Blocks, e.g. 0,3|1|4")->required();
  solve->add_flag("--heuristic", heuristic, "Try the constructive engine before the exact solver");
  solve->add_flag("--trace", trace, "Print the constructive engine's move trace on stderr");

  auto* verify = app.add_subcommand("verify-theorem", "Sample graphs at the degree threshold and check k-knittedness");
  add_output(verify);
  verify->add_option("--n", n_range, "Order or range, e.g. 13 or 14..16");
  verify->add_option("--k", k_range, "Terminal count or range (default 5)");
  verify->add_option("--samples", samples, "Graphs per (n, k)");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--cap", cap, "Instance cap; larger sweeps are sampled down to it");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_flag("--heuristic", heuristic, "Also count instances the constructive engine solves");

  auto* sharp = app.add_subcommand("sharpness", "Build the sharpness graphs and confirm their witnesses fail");
  add_output(sharp);
  sharp->add_option("--n", n_range, "Order or range (empty string for none)");
  sharp->add_option("--k", k_range, "Terminal count or range (default 5..floor((n-3)/2))");

  auto* bench = app.add_subcommand("bench", "Compare the constructive engine with the exact solver");
  add_output(bench);
  bench->add_option("--n", n_range, "Order");
  bench->add_option("--k", k_range, "Terminal count (default 5)");
  bench->add_option("--delta", delta_range, "Minimum degree range, e.g. 6..10");
  bench->add_option("--samples", samples, "Graphs per minimum degree");
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--cap", cap, "Instances per graph before sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    knit::ExperimentConfig cfg;
    cfg.n = knit::parse_range(n_range);
    cfg.k = k_range.empty() ? knit::IntRange::single(5) : knit::parse_range(k_range);
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.cap = cap;
    cfg.jobs = jobs;
    cfg.heuristic = heuristic;
    cfg.delta = knit::parse_range(delta_range);

    if (check->parsed()) return emit(knit::cmd_check(load_graphs(common), k, m, {jobs}), common);
    if (solve->parsed()) {
      auto graphs = load_graphs(common);
      if (graphs.size() != 1) throw knit::InputError("solve expects exactly one graph");
      auto rep = knit::cmd_solve(graphs.front(), knit::parse_parts(parts), heuristic, trace);
      if (trace)
        for (const auto& line : rep.records.front().value("trace", nlohmann::json::array()))
          std::cerr << line.get<std::string>() << '\n';
      return emit(rep, common);
    }
    if (verify->parsed()) return emit(knit::cmd_verify_theorem(cfg), common);
    if (sharp->parsed()) {
      std::optional<knit::IntRange> ks;
      if (!k_range.empty()) ks = knit::parse_range(k_range);
      return emit(knit::cmd_sharpness(knit::parse_range(n_range), ks), common);
    }
    if (bench->parsed()) return emit(knit::cmd_bench(cfg), common);
  } catch (const knit::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const knit::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
