#pragma once

// Text formats, instance generation, run configuration and the benchmark
// table.
//
// Instance text: one genotype per line, either as a contiguous string over
// {0,1,2} or as whitespace-separated digits. An optional first line "n m"
// gives the dimensions. '#' starts a comment; blank lines are skipped.
//
// Solution text: one line per genotype, "i<TAB>h<TAB>k" with i 1-based and
// h <= k lexicographically; "i<TAB>-<TAB>-" marks an unresolved genotype.
//
// Stats: "key=value" lines in a fixed order: algorithm, seed, n, m, best_F,
// best_H, feasible, iterations, time_ms (only when timing is requested), then
// engine-specific keys.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hipp/exact.hpp"
#include "hipp/reduction.hpp"
#include "hipp/search.hpp"

namespace hipp {

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// Foreign tables: rows split on whitespace, commas or semicolons; every
// column containing a cell other than 0, 1 or 2 (ids, names, missing-data
// codes) is dropped and the remaining columns form the genotype rows.
// A first row with a non-genotype cell in a kept column is a header and is
// skipped. Ragged rows are a ParseError.
Instance import_genotypes(std::string_view text);

// Draws `pool` random haplotypes and forms each genotype from a uniformly
// random ordered pool pair (repetition allowed), so the pool resolves the
// instance. With max_het > 0 only pairs differing in at most max_het sites
// are drawn; self pairs always qualify.
Instance generate_instance(std::size_t n, std::size_t m, std::size_t pool, Rng& rng,
                           std::size_t max_het = 0);

std::string serialize_solution(const CompleteSolution& s);
std::string serialize_solution(const IncompleteSolution& s);

// Reads a complete solution. Every genotype must appear exactly once with a
// resolving pair; violations are ParseErrors pointing at the line.
CompleteSolution parse_solution(std::string_view text, const InstancePtr& instance);

using Stats = std::vector<std::pair<std::string, std::string>>;

std::string format_stats(const Stats& stats);
std::optional<std::string> stat_value(const Stats& stats, const std::string& key);
std::string format_number(double x);

enum class Task { ils, dls, adaptive, kfix, exact, reduce };

std::string to_string(Task task);
Task parse_task(const std::string& name);

struct RunConfig {
  Task task = Task::ils;
  // Unset: complete for exact and reduce, incomplete otherwise.
  std::optional<Representation> representation;
  SearchParams params;
  std::optional<double> alpha1, alpha2, alpha3;
  std::size_t restarts = 1;
  std::size_t threads = 1;
  std::uint64_t max_states = ExactLimits{}.max_states;
  ReducePolicy reduce_policy = ReducePolicy::greedy;
  bool timing = false;

  std::string input_path;
  std::string output_path;
  std::string stats_path;
  std::string solution_path;  // reduce: starting solution
  std::string log_path;       // reduce: step log
  std::string trace_path;     // search: "iter F f1 f2 f3p feasible" per iteration
  bool import_input = false;

  Representation effective_representation() const;
  // Throws InputError: reduce needs the complete representation, dls,
  // adaptive and kfix the incomplete one.
  void validate() const;
};

// Sets one option by its config-file key (same names as the long CLI flags).
// Throws InputError on unknown keys and malformed values.
void set_option(RunConfig& config, const std::string& key, const std::string& value);

// "key=value" lines; '#' comments and blank lines ignored.
void load_config(RunConfig& config, std::string_view text);

struct RunOutput {
  int exit_code = 1;
  std::string solution;
  std::string stats;
  std::string log;
  std::string trace;
  Stats values;
};

// Runs the configured task on an instance; `start` is the starting solution
// text for reduce (greedy Clark resolution when absent). Errors propagate as
// exceptions.
RunOutput execute(const RunConfig& config, const InstancePtr& instance,
                  const std::optional<std::string>& start = std::nullopt);

// File-level driver: reads input_path (and solution_path), writes the
// configured outputs (solution to stdout when output_path is empty) and
// returns 0 for a feasible best, 2 for an infeasible one, 1 on error with the
// message on stderr.
int run(const RunConfig& config);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct BenchSpec {
  std::vector<Task> tasks{Task::ils};
  std::size_t instances = 10;
  std::size_t n = 6;
  std::size_t m = 8;
  std::size_t pool = 4;
  std::size_t max_het = 4;
  std::uint64_t seed = 1;  // instance i is generated from derive_seed(seed, i)
  bool oracle = true;
  RunConfig base;
};

// Tab-separated table with header
//   instance seed task n m best_H best_F feasible iterations optimum match
// plus time_ms when base.timing is set. optimum and match are "-" without
// the oracle.
std::string run_bench(const BenchSpec& spec);

}  // namespace hipp
