#pragma once

// Metaheuristics over the two representations:
//   ils_solve        two-neighborhood iterated local search
//   dls_solve        dynamic local search with a shifting penalty on f2
//   adaptive_constructive_solve
//                    insertion with annealing acceptance and cardinality cap
//   k_feasibility_solve
//                    sequence of fixed-|H| feasibility problems
//
// All engines are single-threaded and fully determined by (instance, params).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hipp/init.hpp"
#include "hipp/neighborhood.hpp"
#include "hipp/rng.hpp"
#include "hipp/solution.hpp"

namespace hipp {

enum class Representation { complete, incomplete };
enum class AcceptanceMode { better_or_equal, better, always };

std::string to_string(Representation rep);
Representation parse_representation(const std::string& name);
std::string to_string(AcceptanceMode mode);
AcceptanceMode parse_acceptance(const std::string& name);

struct SearchParams {
  std::uint64_t max_iterations = 10'000;
  // Seconds; 0 disables. Runs cut by the clock are not reproducible.
  double time_limit = 0.0;
  std::uint64_t seed = 1;

  Representation representation = Representation::incomplete;
  Initializer initializer = Initializer::trivial;
  // Reporting/optimization weights; representation defaults when unset.
  std::optional<CostWeights> weights;

  // Local search: consecutive plateau moves allowed without a new best.
  std::size_t stagnation = 10;
  // 0 selects first-improvement descent; otherwise best-improvement tabu
  // search forbidding re-insertion of removed haplotypes for this many moves.
  std::size_t tabu_tenure = 0;

  // ILS
  AcceptanceMode acceptance = AcceptanceMode::better_or_equal;
  // Return to the best solution after this many rejected rounds; 0 disables.
  std::size_t restart_after = 20;
  std::size_t perturbation_moves = 5;

  std::size_t candidate_size = 50;
  CandidatePolicy candidate_policy = CandidatePolicy::mixed;

  // DLS shifting penalty
  std::size_t feasible_streak = 10;
  double gamma_lo = 1.05;
  double gamma_hi = 1.2;
  double w1 = 1.0;
  std::optional<double> w2;  // 4n when unset
  bool adapt_weights = true;

  // Adaptive constructive
  std::size_t max_card = 0;        // 2n when 0
  std::size_t deletion_batch = 0;  // max(1, ceil(0.1 |H|)) when 0
  double t0 = 2.0;
  double cooling = 0.995;
  double t_min = 0.05;  // reheat to t0 below this

  bool trace = false;

  // Throws InputError on out-of-range values.
  void validate() const;
};

struct TraceRow {
  std::uint64_t iteration = 0;
  double cost = 0.0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  std::size_t f3_prime = 0;
  bool feasible = false;
};

struct SearchReport {
  std::string algorithm;
  Representation representation = Representation::incomplete;
  std::optional<CompleteSolution> complete;
  std::optional<IncompleteSolution> incomplete;
  CostWeights weights;
  double best_cost = 0.0;
  std::size_t best_size = 0;
  bool feasible = false;
  std::uint64_t iterations = 0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  std::vector<TraceRow> trace;  // incumbent after each iteration
  std::vector<std::pair<std::string, std::string>> extra;

  CostTerms terms() const;
};

CostWeights effective_weights(const SearchParams& params, const Instance& instance);

// Which moves a local search may use (incomplete representation).
struct MoveSet {
  bool flips = true;
  bool swaps = false;
  bool inserts = false;
  bool removals = false;
};

// Descent (or tabu search, see SearchParams::tabu_tenure) from `s`; on return
// `s` holds the best state found, which is the input if nothing was better.
// Stops at a local optimum once `params.stagnation` plateau moves in a row
// failed to improve, or after `max_steps` moves.
void local_search(IncompleteSolution& s, const MoveSet& moves, const CostWeights& w,
                  const SearchParams& params, Rng& rng, std::uint64_t max_steps = UINT64_MAX);
void local_search(CompleteSolution& s, const CostWeights& w, const SearchParams& params, Rng& rng,
                  std::uint64_t max_steps = UINT64_MAX);

SearchReport ils_solve(const InstancePtr& instance, const SearchParams& params);
SearchReport dls_solve(const InstancePtr& instance, const SearchParams& params);
SearchReport adaptive_constructive_solve(const InstancePtr& instance, const SearchParams& params);
SearchReport k_feasibility_solve(const InstancePtr& instance, const SearchParams& params);

// Shifting penalty on the feasibility weight. After each local search the
// outcome is recorded; when the last K outcomes were all feasible w2 is
// divided by gamma, otherwise multiplied by gamma, with gamma drawn
// uniformly from [gamma_lo, gamma_hi] each time. w1 is constant.
class ShiftingPenalty {
 public:
  ShiftingPenalty(double w1, double w2, std::size_t streak_length, double gamma_lo,
                  double gamma_hi);

  // Returns the new w2.
  double update(bool feasible, Rng& rng);

  double w1() const { return w1_; }
  double w2() const { return w2_; }
  std::size_t streak() const { return streak_; }

 private:
  double w1_;
  double w2_;
  std::size_t streak_length_;
  double gamma_lo_;
  double gamma_hi_;
  std::size_t streak_ = 0;
};

std::pair<double, double> update_weights(ShiftingPenalty& state, bool feasible, Rng& rng);

enum class Algorithm { ils, dls, adaptive, kfix };

std::string to_string(Algorithm algo);
Algorithm parse_algorithm(const std::string& name);

SearchReport solve(const InstancePtr& instance, Algorithm algo, const SearchParams& params);

// Independent runs seeded derive_seed(params.seed, r), merged by feasibility,
// then cost, then restart index. `threads` > 1 runs them concurrently; the
// result does not depend on it.
SearchReport solve_with_restarts(const InstancePtr& instance, Algorithm algo,
                                 const SearchParams& params, std::size_t restarts,
                                 std::size_t threads = 1);

}  // namespace hipp
