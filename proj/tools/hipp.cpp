// hipp command-line front end; talks to the library through the C API only.

#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hipp/hipp.h"

namespace {

struct Options {
  std::map<std::string, std::string> values;  // config key -> value
  std::deque<bool> flag_storage;
  std::vector<std::pair<std::string, bool*>> flags;
  std::string config_file;
};

void add(CLI::App* app, Options& o, const std::string& key, const std::string& help) {
  app->add_option("--" + key, o.values[key], help);
}

void add_flag(CLI::App* app, Options& o, const std::string& key, const std::string& help) {
  bool* flag = &o.flag_storage.emplace_back(false);
  app->add_flag("--" + key, *flag, help);
  o.flags.emplace_back(key, flag);
}

void add_search_options(CLI::App* app, Options& o) {
  add(app, o, "algo", "ils|dls|adaptive|kfix");
  add(app, o, "rep", "complete|incomplete");
  add(app, o, "seed", "master seed");
  add(app, o, "restarts", "independent runs");
  add(app, o, "threads", "worker threads for restarts");
  add(app, o, "alpha1", "weight of |H|");
  add(app, o, "alpha2", "weight of unresolved genotypes");
  add(app, o, "alpha3", "weight of the compatibility term");
  add(app, o, "max-iters", "iteration budget");
  add(app, o, "time-limit", "seconds, 0 = none");
  add(app, o, "init", "trivial|clark|empty");
  add(app, o, "stagnation", "plateau moves without improvement");
  add(app, o, "tabu-tenure", "0 = descent");
  add(app, o, "acceptance", "better-or-equal|better|always");
  add(app, o, "restart-after", "rejections before returning to the best");
  add(app, o, "perturbation", "deletion/insertion moves per kick");
  add(app, o, "candidates", "candidate set size");
  add(app, o, "candidate-policy", "random|heuristic|mixed");
  add(app, o, "streak", "feasible streak K");
  add(app, o, "gamma-lo", "lower bound of the penalty factor");
  add(app, o, "gamma-hi", "upper bound of the penalty factor");
  add(app, o, "w1", "DLS weight of |H|");
  add(app, o, "w2", "DLS initial feasibility weight");
  add(app, o, "adapt", "DLS: adapt w2 (true|false)");
  add(app, o, "max-card", "adaptive: cardinality cap");
  add(app, o, "deletion-batch", "adaptive: haplotypes removed at the cap");
  add(app, o, "t0", "adaptive: initial temperature");
  add(app, o, "cooling", "adaptive: cooling factor");
  add(app, o, "t-min", "adaptive: reheat threshold");
}

void add_io_options(CLI::App* app, Options& o, bool require_input = true) {
  auto* in = app->add_option("--in", o.values["in"], "instance file");
  if (require_input) in->required();
  add(app, o, "out", "solution file (default stdout)");
  add(app, o, "stats", "stats file (default stdout)");
  add_flag(app, o, "timing", "add time_ms to the stats");
  add_flag(app, o, "import", "read the input as a foreign table");
  app->add_option("--config", o.config_file, "key=value config file");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int report(int status) {
  std::cerr << "error: " << hipp_last_error() << "\n";
  return status == HIPP_OK ? 0 : 1;
}

// Config file first, then explicit flags.
hipp_config* build_config(const Options& o, const std::vector<std::pair<std::string, std::string>>& fixed) {
  hipp_config* cfg = nullptr;
  if (hipp_config_new(&cfg) != HIPP_OK) return nullptr;
  auto ok = [&](int status) {
    if (status == HIPP_OK) return true;
    report(status);
    hipp_config_free(cfg);
    cfg = nullptr;
    return false;
  };
  if (!o.config_file.empty()) {
    std::string text;
    try {
      text = slurp(o.config_file);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      hipp_config_free(cfg);
      return nullptr;
    }
    if (!ok(hipp_config_load(cfg, text.c_str()))) return nullptr;
  }
  for (const auto& [k, v] : fixed)
    if (!ok(hipp_config_set(cfg, k.c_str(), v.c_str()))) return nullptr;
  for (const auto& [k, v] : o.values)
    if (!v.empty() && !ok(hipp_config_set(cfg, k.c_str(), v.c_str()))) return nullptr;
  for (const auto& [k, flag] : o.flags)
    if (*flag && !ok(hipp_config_set(cfg, k.c_str(), "true"))) return nullptr;
  return cfg;
}

int run_with(const Options& o, const std::vector<std::pair<std::string, std::string>>& fixed) {
  hipp_config* cfg = build_config(o, fixed);
  if (cfg == nullptr) return 1;
  const int code = hipp_run_files(cfg);
  hipp_config_free(cfg);
  return code;
}

int write_text(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haplotype inference by pure parsimony"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hipp_version());

  Options solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "run a metaheuristic");
  add_io_options(solve, solve_opts);
  add_search_options(solve, solve_opts);
  add(solve, solve_opts, "trace", "incumbent trace file (TSV)");

  Options exact_opts;
  CLI::App* exact = app.add_subcommand("exact", "exact minimum by branch and bound");
  add_io_options(exact, exact_opts);
  add(exact, exact_opts, "max-states", "refuse when the pair-choice product exceeds this");

  Options reduce_opts;
  CLI::App* reduce = app.add_subcommand("reduce", "local cardinality reduction");
  add_io_options(reduce, reduce_opts);
  add(reduce, reduce_opts, "solution", "starting solution (default: greedy Clark)");
  add(reduce, reduce_opts, "log", "step log file");
  add(reduce, reduce_opts, "policy", "greedy|lookahead-1");

  std::size_t gen_n = 6, gen_m = 8, gen_pool = 4, gen_het = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_n, "genotypes");
  gen->add_option("--m", gen_m, "sites");
  gen->add_option("--pool", gen_pool, "planted haplotypes");
  gen->add_option("--max-het", gen_het, "heterozygous sites per genotype, 0 = any");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", gen_out, "instance file (default stdout)");

  Options bench_opts;
  std::string bench_algos = "ils";
  std::size_t bench_count = 10, bench_n = 6, bench_m = 8, bench_pool = 4, bench_het = 4;
  std::uint64_t bench_seed = 1;
  bool bench_no_oracle = false;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "benchmark table over generated instances");
  bench->add_option("--algos", bench_algos, "comma-separated algorithms");
  bench->add_option("--instances", bench_count, "instance count");
  bench->add_option("--n", bench_n, "genotypes");
  bench->add_option("--m", bench_m, "sites");
  bench->add_option("--pool", bench_pool, "planted haplotypes");
  bench->add_option("--max-het", bench_het, "heterozygous sites per genotype, 0 = any");
  bench->add_option("--instance-seed", bench_seed, "seed of the instance stream");
  bench->add_flag("--no-oracle", bench_no_oracle, "skip the exact optimum");
  bench->add_option("--out", bench_out, "table file (default stdout)");
  add_search_options(bench, bench_opts);
  add(bench, bench_opts, "max-states", "oracle size guard");
  add_flag(bench, bench_opts, "timing", "add a time_ms column");
  bench->add_option("--config", bench_opts.config_file, "key=value config file");

  std::string graph_in, graph_out;
  CLI::App* graph = app.add_subcommand("graph", "print the genotype compatibility graph");
  graph->add_option("--in", graph_in, "instance file")->required();
  graph->add_option("--out", graph_out, "output file (default stdout)");

  std::string verify_in, verify_solution;
  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--solution", verify_solution, "solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*solve) return run_with(solve_opts, {});
  if (*exact) return run_with(exact_opts, {{"algorithm", "exact"}});
  if (*reduce) return run_with(reduce_opts, {{"algorithm", "reduce"}});

  if (*gen) {
    hipp_instance* inst = nullptr;
    char* text = nullptr;
    if (int s = hipp_instance_generate(gen_n, gen_m, gen_pool, gen_het, gen_seed, &inst); s)
      return report(s);
    const int s = hipp_instance_serialize(inst, &text);
    hipp_instance_free(inst);
    if (s) return report(s);
    const int code = write_text(gen_out, text);
    hipp_string_free(text);
    return code;
  }

  if (*bench) {
    hipp_config* cfg = build_config(bench_opts, {});
    if (cfg == nullptr) return 1;
    char* table = nullptr;
    const int s = hipp_bench(cfg, bench_algos.c_str(), bench_count, bench_n, bench_m, bench_pool,
                             bench_het, bench_seed, bench_no_oracle ? 0 : 1, &table);
    hipp_config_free(cfg);
    if (s) return report(s);
    const int code = write_text(bench_out, table);
    hipp_string_free(table);
    return code;
  }

  if (*graph) {
    hipp_instance* inst = nullptr;
    char* text = nullptr;
    if (int s = hipp_instance_load(graph_in.c_str(), &inst); s) return report(s);
    const int s = hipp_instance_graph(inst, &text);
    hipp_instance_free(inst);
    if (s) return report(s);
    const int code = write_text(graph_out, text);
    hipp_string_free(text);
    return code;
  }

  if (*verify) {
    hipp_instance* inst = nullptr;
    if (int s = hipp_instance_load(verify_in.c_str(), &inst); s) return report(s);
    std::string text;
    try {
      text = slurp(verify_solution);
    } catch (const std::exception& e) {
      hipp_instance_free(inst);
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    int ok = 0;
    hipp_instance_verify(inst, text.c_str(), &ok);
    hipp_instance_free(inst);
    if (ok) {
      std::cout << "valid\n";
      return 0;
    }
    std::cout << "invalid: " << hipp_last_error() << "\n";
    return 2;
  }
  return 1;
}
