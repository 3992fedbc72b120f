#include "hipp/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>
#include <unordered_map>

namespace hipp {

std::string to_string(Representation rep) {
  return rep == Representation::complete ? "complete" : "incomplete";
}

Representation parse_representation(const std::string& name) {
  if (name == "complete") return Representation::complete;
  if (name == "incomplete") return Representation::incomplete;
  throw InputError("unknown representation '" + name + "' (complete|incomplete)");
}

std::string to_string(AcceptanceMode mode) {
  switch (mode) {
    case AcceptanceMode::better_or_equal:
      return "better-or-equal";
    case AcceptanceMode::better:
      return "better";
    case AcceptanceMode::always:
      return "always";
  }
  return "better-or-equal";
}

AcceptanceMode parse_acceptance(const std::string& name) {
  if (name == "better-or-equal") return AcceptanceMode::better_or_equal;
  if (name == "better") return AcceptanceMode::better;
  if (name == "always") return AcceptanceMode::always;
  throw InputError("unknown acceptance mode '" + name + "' (better-or-equal|better|always)");
}

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::ils:
      return "ils";
    case Algorithm::dls:
      return "dls";
    case Algorithm::adaptive:
      return "adaptive";
    case Algorithm::kfix:
      return "kfix";
  }
  return "ils";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "ils") return Algorithm::ils;
  if (name == "dls") return Algorithm::dls;
  if (name == "adaptive") return Algorithm::adaptive;
  if (name == "kfix") return Algorithm::kfix;
  throw InputError("unknown search algorithm '" + name + "' (ils|dls|adaptive|kfix)");
}

void SearchParams::validate() const {
  if (time_limit < 0) throw InputError("time limit must be non-negative");
  if (candidate_size == 0) throw InputError("candidate set size must be at least 1");
  if (feasible_streak == 0) throw InputError("feasible streak length K must be at least 1");
  if (!(gamma_lo > 1.0)) throw InputError("gamma lower bound must exceed 1");
  if (gamma_hi < gamma_lo) throw InputError("gamma upper bound is below the lower bound");
  if (!(w1 > 0)) throw InputError("w1 must be positive");
  if (w2 && *w2 < 0) throw InputError("w2 must be non-negative");
  if (w2 && *w2 == 0 && adapt_weights) throw InputError("w2 must be positive when weights adapt");
  if (!(t0 > 0)) throw InputError("initial temperature must be positive");
  if (!(cooling > 0 && cooling <= 1)) throw InputError("cooling factor must be in (0, 1]");
  if (t_min < 0 || t_min >= t0) throw InputError("reheat threshold must be in [0, t0)");
  if (weights) {
    if (weights->alpha1 < 0 || weights->alpha2 < 0 || weights->alpha3 < 0)
      throw InputError("cost weights must be non-negative");
    if (representation == Representation::incomplete && weights->alpha2 == 0)
      throw InputError("alpha2 = 0 is only allowed for the complete representation");
  }
}

CostWeights effective_weights(const SearchParams& params, const Instance& instance) {
  if (params.weights) return *params.weights;
  return params.representation == Representation::complete
             ? CostWeights::complete_defaults()
             : CostWeights::incomplete_defaults(instance.size());
}

CostTerms SearchReport::terms() const {
  if (complete) return complete->terms();
  if (incomplete) return incomplete->terms();
  return {};
}

namespace {

constexpr double kEps = 1e-9;

class Clock {
 public:
  explicit Clock(double limit_seconds)
      : start_(std::chrono::steady_clock::now()), limit_(limit_seconds) {}
  bool expired() const { return limit_ > 0 && seconds() >= limit_; }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  double millis() const { return seconds() * 1000.0; }

 private:
  std::chrono::steady_clock::time_point start_;
  double limit_;
};

using Touched = boost::container::small_vector<Haplotype, 2>;

// ---------------------------------------------------------------------------
// Neighborhood adapters for the generic descent.

class IncompleteMoves {
 public:
  IncompleteMoves(const MoveSet& set, const SearchParams& params, const CostWeights& w)
      : set_(set), params_(params), w_(w) {}

  std::size_t prepare(const IncompleteSolution& s, Rng& rng) {
    h_ = s.size();
    m_ = s.instance().sites();
    cand_.haplotypes.clear();
    if (set_.swaps || set_.inserts)
      cand_ = generate_candidate_set(s, params_.candidate_policy, params_.candidate_size, rng);
    c_ = cand_.size();
    flips_ = set_.flips ? h_ * m_ : 0;
    removals_ = set_.removals ? h_ : 0;
    inserts_ = set_.inserts ? c_ : 0;
    swaps_ = set_.swaps ? h_ * c_ : 0;
    return flips_ + removals_ + inserts_ + swaps_;
  }

  bool evaluate(const IncompleteSolution& s, std::size_t idx, double& delta) const {
    const double before = s.terms().total(w_);
    CostTerms after;
    if (idx < flips_) {
      const MoveOutcome o = evaluate_flip(s, {idx / m_, idx % m_}, w_);
      if (!o.feasible) return false;
      delta = o.delta;
      return true;
    }
    idx -= flips_;
    if (idx < removals_) {
      after = s.terms_after_erase(idx);
    } else if ((idx -= removals_) < inserts_) {
      const Haplotype& z = cand_.haplotypes[idx];
      if (s.contains(z)) return false;
      after = s.terms_after_insert(z);
    } else {
      idx -= inserts_;
      after = s.terms_after_replace(idx / c_, cand_.haplotypes[idx % c_]);
    }
    delta = after.total(w_) - before;
    return true;
  }

  void apply(IncompleteSolution& s, std::size_t idx) const {
    if (idx < flips_) {
      apply_flip(s, {idx / m_, idx % m_}, w_);
      return;
    }
    idx -= flips_;
    if (idx < removals_) {
      const Haplotype h = s.member(idx);
      s.erase(h);
    } else if ((idx -= removals_) < inserts_) {
      s.insert(cand_.haplotypes[idx]);
    } else {
      idx -= inserts_;
      s.replace(idx / c_, cand_.haplotypes[idx % c_]);
    }
  }

  void touched(const IncompleteSolution& s, std::size_t idx, Touched& removed,
               Touched& inserted) const {
    removed.clear();
    inserted.clear();
    if (idx < flips_) {
      removed.push_back(s.member(idx / m_));
      Haplotype h = s.member(idx / m_);
      h.flip(idx % m_);
      if (!s.contains(h)) inserted.push_back(std::move(h));
      return;
    }
    idx -= flips_;
    if (idx < removals_) {
      removed.push_back(s.member(idx));
    } else if ((idx -= removals_) < inserts_) {
      inserted.push_back(cand_.haplotypes[idx]);
    } else {
      idx -= inserts_;
      removed.push_back(s.member(idx / c_));
      const Haplotype& z = cand_.haplotypes[idx % c_];
      if (!s.contains(z)) inserted.push_back(z);
    }
  }

 private:
  MoveSet set_;
  const SearchParams& params_;
  CostWeights w_;
  CandidateSet cand_;
  std::size_t h_ = 0, m_ = 0, c_ = 0;
  std::size_t flips_ = 0, removals_ = 0, inserts_ = 0, swaps_ = 0;
};

// Flips of representatives at heterozygous sites.
class CompleteMoves {
 public:
  CompleteMoves(const Instance& instance, const CostWeights& w) : w_(w) {
    for (std::size_t i = 0; i < instance.size(); ++i)
      for (std::size_t j : het_sites(instance[i])) moves_.push_back({i, j});
  }

  std::size_t prepare(const CompleteSolution&, Rng&) { return moves_.size(); }

  bool evaluate(const CompleteSolution& s, std::size_t idx, double& delta) const {
    const MoveOutcome o = evaluate_flip(s, moves_[idx], w_);
    delta = o.delta;
    return o.feasible;
  }

  void apply(CompleteSolution& s, std::size_t idx) const { apply_flip(s, moves_[idx], w_); }

  void touched(const CompleteSolution& s, std::size_t idx, Touched& removed,
               Touched& inserted) const {
    removed.clear();
    inserted.clear();
    const FlipMove& mv = moves_[idx];
    const auto [h, k] = s.pair(mv.member);
    removed.push_back(h);
    removed.push_back(k);
    Haplotype nh = h;
    nh.flip(mv.site);
    Haplotype nk = k;
    nk.flip(mv.site);
    inserted.push_back(std::move(nh));
    inserted.push_back(std::move(nk));
  }

 private:
  CostWeights w_;
  std::vector<FlipMove> moves_;
};

bool any_in(const Touched& xs, const std::vector<Haplotype>& list) {
  for (const Haplotype& x : xs)
    if (std::find(list.begin(), list.end(), x) != list.end()) return true;
  return false;
}

// First-improvement descent. At a local optimum it walks the plateau with
// random zero-delta moves (never re-inserting a haplotype removed during the
// walk) for at most `stagnation` moves; if no improvement follows, the state
// from before the walk is restored.
template <class State, class Moves>
void descend(State& s, Moves& moves, const CostWeights& w, const SearchParams& params, Rng& rng,
             std::uint64_t max_steps) {
  std::optional<State> snapshot;
  std::vector<Haplotype> walked;
  std::size_t plateau = 0;
  Touched removed, inserted;
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    const std::size_t count = moves.prepare(s, rng);
    std::optional<std::size_t> improving;
    std::optional<std::size_t> sideways;
    std::size_t sideways_seen = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
      double delta = 0;
      if (!moves.evaluate(s, idx, delta)) continue;
      if (delta < -kEps) {
        improving = idx;
        break;
      }
      if (delta <= kEps && plateau < params.stagnation) {
        moves.touched(s, idx, removed, inserted);
        if (any_in(inserted, walked)) continue;
        if (rng.below(++sideways_seen) == 0) sideways = idx;
      }
    }
    if (improving) {
      moves.apply(s, *improving);
      snapshot.reset();
      walked.clear();
      plateau = 0;
      continue;
    }
    if (!sideways) break;
    if (!snapshot) snapshot = s;
    moves.touched(s, *sideways, removed, inserted);
    walked.insert(walked.end(), removed.begin(), removed.end());
    moves.apply(s, *sideways);
    ++plateau;
  }
  if (snapshot) s = std::move(*snapshot);
  (void)w;
}

// Best-improvement tabu search: always moves to the best admissible
// neighbor; a move is inadmissible when it re-inserts a haplotype removed
// within the last `tenure` moves, unless it yields a new best.
template <class State, class Moves>
void tabu_search(State& s, Moves& moves, const CostWeights& w, const SearchParams& params,
                 Rng& rng, std::uint64_t max_steps) {
  State best = s;
  double best_cost = s.terms().total(w);
  std::unordered_map<Haplotype, std::uint64_t, HaplotypeHash> tabu_until;
  std::size_t idle = 0;
  Touched removed, inserted;
  for (std::uint64_t step = 0; step < max_steps && idle <= params.stagnation; ++step) {
    const std::size_t count = moves.prepare(s, rng);
    const double current = s.terms().total(w);
    std::optional<std::size_t> chosen;
    double chosen_delta = 0;
    std::size_t ties = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
      double delta = 0;
      if (!moves.evaluate(s, idx, delta)) continue;
      if (chosen && delta > chosen_delta + kEps) continue;
      moves.touched(s, idx, removed, inserted);
      bool tabu = false;
      for (const Haplotype& h : inserted) {
        const auto it = tabu_until.find(h);
        if (it != tabu_until.end() && it->second > step) tabu = true;
      }
      if (tabu && current + delta >= best_cost - kEps) continue;
      if (!chosen || delta < chosen_delta - kEps) {
        chosen = idx;
        chosen_delta = delta;
        ties = 1;
      } else if (rng.below(++ties) == 0) {
        chosen = idx;
      }
    }
    if (!chosen) break;
    moves.touched(s, *chosen, removed, inserted);
    for (const Haplotype& h : removed) tabu_until[h] = step + params.tabu_tenure;
    moves.apply(s, *chosen);
    const double now = s.terms().total(w);
    if (now < best_cost - kEps) {
      best = s;
      best_cost = now;
      idle = 0;
    } else {
      ++idle;
    }
  }
  s = std::move(best);
}

// Feasible states first, then lower cost.
bool better(const CostTerms& a, const CostTerms& b, const CostWeights& w) {
  if (a.feasible() != b.feasible()) return a.feasible();
  return a.total(w) < b.total(w) - kEps;
}

IncompleteSolution initial_incomplete(const InstancePtr& instance, Initializer init, Rng& rng) {
  switch (init) {
    case Initializer::trivial:
      return to_incomplete(trivial_complete_init(instance, rng));
    case Initializer::clark:
      return to_incomplete(greedy_clark_init(instance));
    case Initializer::empty:
      return empty_init(instance);
  }
  return empty_init(instance);
}

CompleteSolution initial_complete(const InstancePtr& instance, Initializer init, Rng& rng) {
  switch (init) {
    case Initializer::trivial:
      return trivial_complete_init(instance, rng);
    case Initializer::clark:
      return greedy_clark_init(instance);
    case Initializer::empty:
      break;
  }
  throw InputError("the empty initializer needs the incomplete representation");
}

TraceRow trace_row(std::uint64_t it, const CostTerms& t, const CostWeights& w) {
  return {it, t.total(w), t.f1, t.f2, t.f3_prime(), t.feasible()};
}

void finish(SearchReport& r, const CostWeights& w, const Clock& clock) {
  const CostTerms t = r.terms();
  r.weights = w;
  r.best_cost = t.total(w);
  r.best_size = t.f1;
  r.feasible = t.feasible();
  r.wall_ms = clock.millis();
}

bool accept(double trial, double current, AcceptanceMode mode) {
  switch (mode) {
    case AcceptanceMode::better_or_equal:
      return trial <= current + kEps;
    case AcceptanceMode::better:
      return trial < current - kEps;
    case AcceptanceMode::always:
      return true;
  }
  return false;
}

// I/D perturbation: `perturbation_moves` accepted swaps against a fresh
// candidate set. Each swap is the first non-worsening one among up to |C|
// random (member, candidate) draws, else the least-worsening draw.
void perturb(IncompleteSolution& s, const CostWeights& w, const SearchParams& params, Rng& rng) {
  CandidateSet c = generate_candidate_set(s, params.candidate_policy, params.candidate_size, rng);
  if (c.empty()) return;
  for (std::size_t move = 0; move < params.perturbation_moves; ++move) {
    if (s.empty()) {
      const Haplotype& z = c.haplotypes[rng.below(c.size())];
      if (!s.contains(z)) s.insert(z);
      continue;
    }
    const double before = s.terms().total(w);
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    double pick_delta = 0;
    for (std::size_t draw = 0; draw < c.size(); ++draw) {
      const std::size_t pos = rng.below(s.size());
      const std::size_t z = rng.below(c.size());
      if (s.contains(c.haplotypes[z])) continue;
      const double delta = s.terms_after_replace(pos, c.haplotypes[z]).total(w) - before;
      if (!pick || delta < pick_delta) {
        pick.emplace(pos, z);
        pick_delta = delta;
      }
      if (delta <= kEps) break;
    }
    if (!pick) break;
    s.replace(pick->first, c.haplotypes[pick->second]);
  }
}

// Complete-representation analogue: re-resolve a genotype through a
// candidate haplotype compatible with it.
void perturb(CompleteSolution& s, const CostWeights& w, const SearchParams& params, Rng& rng) {
  CandidateSet c = generate_candidate_set(s, params.candidate_policy, params.candidate_size, rng);
  if (c.empty()) return;
  const Instance& inst = s.instance();
  std::vector<std::size_t> targets;
  for (std::size_t move = 0; move < params.perturbation_moves; ++move) {
    const double before = s.terms().total(w);
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    double pick_delta = 0;
    for (std::size_t draw = 0; draw < c.size(); ++draw) {
      const std::size_t z = rng.below(c.size());
      targets.clear();
      for (std::size_t i = 0; i < inst.size(); ++i)
        if (inst[i].het_count() > 0 && compatible_unchecked(inst[i], c.haplotypes[z]))
          targets.push_back(i);
      if (targets.empty()) continue;
      const std::size_t g = targets[rng.below(targets.size())];
      const double delta = s.terms_after_assign(g, c.haplotypes[z]).total(w) - before;
      if (!pick || delta < pick_delta) {
        pick.emplace(g, z);
        pick_delta = delta;
      }
      if (delta <= kEps) break;
    }
    if (!pick) break;
    s.assign(pick->first, c.haplotypes[pick->second]);
  }
}

void ils_descent(IncompleteSolution& s, const CostWeights& w, const SearchParams& params,
                 Rng& rng) {
  hipp::local_search(s, MoveSet{}, w, params, rng);
}

void ils_descent(CompleteSolution& s, const CostWeights& w, const SearchParams& params,
                 Rng& rng) {
  hipp::local_search(s, w, params, rng);
}

template <class State>
SearchReport ils_generic(State s0, const CostWeights& w, const SearchParams& params, Rng& rng,
                         const Clock& clock, SearchReport report) {
  ils_descent(s0, w, params, rng);
  State current = s0;
  State best = s0;
  std::size_t rejects = 0;
  std::uint64_t it = 0;
  while (it < params.max_iterations && !clock.expired()) {
    ++it;
    State trial = current;
    perturb(trial, w, params, rng);
    ils_descent(trial, w, params, rng);
    if (better(trial.terms(), best.terms(), w)) best = trial;
    if (accept(trial.terms().total(w), current.terms().total(w), params.acceptance)) {
      current = std::move(trial);
      rejects = 0;
    } else if (params.restart_after > 0 && ++rejects >= params.restart_after) {
      current = best;
      rejects = 0;
    }
    if (params.trace) report.trace.push_back(trace_row(it, best.terms(), w));
  }
  report.iterations = it;
  if constexpr (std::is_same_v<State, CompleteSolution>)
    report.complete = std::move(best);
  else
    report.incomplete = std::move(best);
  finish(report, w, clock);
  return report;
}

SearchReport new_report(const char* algorithm, const SearchParams& params) {
  SearchReport r;
  r.algorithm = algorithm;
  r.representation = params.representation;
  r.seed = params.seed;
  return r;
}

void require_incomplete(const SearchParams& params, const char* algorithm) {
  if (params.representation != Representation::incomplete)
    throw InputError(std::string(algorithm) + " requires the incomplete representation");
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------

void local_search(IncompleteSolution& s, const MoveSet& moves, const CostWeights& w,
                  const SearchParams& params, Rng& rng, std::uint64_t max_steps) {
  IncompleteMoves nb(moves, params, w);
  if (params.tabu_tenure > 0)
    tabu_search(s, nb, w, params, rng, max_steps);
  else
    descend(s, nb, w, params, rng, max_steps);
}

void local_search(CompleteSolution& s, const CostWeights& w, const SearchParams& params, Rng& rng,
                  std::uint64_t max_steps) {
  CompleteMoves nb(s.instance(), w);
  if (params.tabu_tenure > 0)
    tabu_search(s, nb, w, params, rng, max_steps);
  else
    descend(s, nb, w, params, rng, max_steps);
}

SearchReport ils_solve(const InstancePtr& instance, const SearchParams& params) {
  params.validate();
  const Clock clock(params.time_limit);
  Rng rng(params.seed);
  const CostWeights w = effective_weights(params, *instance);
  SearchReport report = new_report("ils", params);
  if (params.representation == Representation::complete)
    return ils_generic(initial_complete(instance, params.initializer, rng), w, params, rng, clock,
                       std::move(report));
  return ils_generic(initial_incomplete(instance, params.initializer, rng), w, params, rng, clock,
                     std::move(report));
}

// ---------------------------------------------------------------------------
// Dynamic local search

ShiftingPenalty::ShiftingPenalty(double w1, double w2, std::size_t streak_length, double gamma_lo,
                                 double gamma_hi)
    : w1_(w1), w2_(w2), streak_length_(streak_length), gamma_lo_(gamma_lo), gamma_hi_(gamma_hi) {
  if (!(w2 > 0)) throw InputError("w2 must be positive");
  if (streak_length == 0) throw InputError("feasible streak length K must be at least 1");
  if (!(gamma_lo > 1.0) || gamma_hi < gamma_lo) throw InputError("need 1 < gamma_lo <= gamma_hi");
}

double ShiftingPenalty::update(bool feasible, Rng& rng) {
  streak_ = feasible ? streak_ + 1 : 0;
  const double gamma = rng.uniform(gamma_lo_, gamma_hi_);
  if (streak_ >= streak_length_)
    w2_ = std::max(w2_ / gamma, std::numeric_limits<double>::min());
  else
    w2_ *= gamma;
  return w2_;
}

std::pair<double, double> update_weights(ShiftingPenalty& state, bool feasible, Rng& rng) {
  state.update(feasible, rng);
  return {state.w1(), state.w2()};
}

SearchReport dls_solve(const InstancePtr& instance, const SearchParams& params) {
  params.validate();
  require_incomplete(params, "dls");
  const Clock clock(params.time_limit);
  Rng rng(params.seed);
  const double w2_start = params.w2.value_or(4.0 * static_cast<double>(instance->size()));
  const CostWeights score{params.w1, w2_start, 0.0};
  std::optional<ShiftingPenalty> penalty;
  if (params.adapt_weights)
    penalty.emplace(params.w1, w2_start, params.feasible_streak, params.gamma_lo, params.gamma_hi);
  double w2 = w2_start;

  IncompleteSolution s = initial_incomplete(instance, params.initializer, rng);
  const MoveSet moves{true, false, true, true};
  std::optional<IncompleteSolution> best_feasible;
  std::optional<IncompleteSolution> best_any;
  SearchReport report = new_report("dls", params);
  std::uint64_t it = 0;
  while (it < params.max_iterations && !clock.expired()) {
    ++it;
    const CostWeights w{params.w1, w2, 0.0};
    local_search(s, moves, w, params, rng);
    const CostTerms& t = s.terms();
    if (t.feasible()) {
      if (!best_feasible || better(t, best_feasible->terms(), score)) best_feasible = s;
    } else if (!best_any || better(t, best_any->terms(), score)) {
      best_any = s;
    }
    if (penalty) w2 = penalty->update(t.feasible(), rng);
    if (params.trace) {
      const IncompleteSolution& b = best_feasible ? *best_feasible : *best_any;
      report.trace.push_back(trace_row(it, b.terms(), score));
    }
  }
  if (best_feasible)
    report.incomplete = std::move(best_feasible);
  else if (best_any)
    report.incomplete = std::move(best_any);
  else
    report.incomplete = std::move(s);
  report.iterations = it;
  report.extra.emplace_back("final_w2", format_double(w2));
  finish(report, score, clock);
  return report;
}

// ---------------------------------------------------------------------------
// Adaptive constructive

namespace {

// Removes the q least useful members: fewest genotypes relying on them in
// some resolving pair, then fewest compatibilities, then random.
void delete_least_useful(IncompleteSolution& s, std::size_t q, Rng& rng) {
  struct Ranked {
    std::size_t usage;
    std::size_t compat;
    std::uint64_t noise;
    Haplotype h;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(s.size());
  for (std::size_t p = 0; p < s.size(); ++p)
    ranked.push_back({s.usage(s.member(p)), s.member_compatibility(p), rng.next(), s.member(p)});
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.usage != b.usage) return a.usage < b.usage;
    if (a.compat != b.compat) return a.compat < b.compat;
    return a.noise < b.noise;
  });
  for (std::size_t r = 0; r < q && r < ranked.size(); ++r) s.erase(ranked[r].h);
}

}  // namespace

SearchReport adaptive_constructive_solve(const InstancePtr& instance, const SearchParams& params) {
  params.validate();
  require_incomplete(params, "adaptive");
  const Clock clock(params.time_limit);
  Rng rng(params.seed);
  const CostWeights w = effective_weights(params, *instance);
  const std::size_t max_card = params.max_card ? params.max_card : 2 * instance->size();

  IncompleteSolution s = empty_init(instance);
  std::optional<IncompleteSolution> best;
  double temperature = params.t0;
  SearchReport report = new_report("adaptive", params);
  std::uint64_t it = 0;
  std::uint64_t deletions = 0;
  while (it < params.max_iterations && !clock.expired()) {
    ++it;
    const CandidateSet c =
        generate_candidate_set(s, params.candidate_policy, params.candidate_size, rng);
    if (!c.empty()) {
      // Take the best candidate if it improves F, otherwise a random one.
      const double before = s.terms().total(w);
      std::size_t pick = 0;
      double pick_delta = 0;
      for (std::size_t z = 0; z < c.size(); ++z) {
        const double delta = s.terms_after_insert(c.haplotypes[z]).total(w) - before;
        if (z == 0 || delta < pick_delta - kEps) {
          pick = z;
          pick_delta = delta;
        }
      }
      if (pick_delta >= 0) {
        pick = rng.below(c.size());
        pick_delta = s.terms_after_insert(c.haplotypes[pick]).total(w) - before;
      }
      const bool take = pick_delta < 0 || rng.unit() < std::exp(-pick_delta / temperature);
      if (take) s.insert(c.haplotypes[pick]);
      temperature *= params.cooling;
      if (temperature < params.t_min) temperature = params.t0;
    }
    if (s.size() > max_card) {
      const std::size_t q =
          params.deletion_batch
              ? params.deletion_batch
              : std::max<std::size_t>(1, (s.size() + 9) / 10);
      delete_least_useful(s, q, rng);
      ++deletions;
    }
    if (!best || better(s.terms(), best->terms(), w)) best = s;
    if (params.trace) report.trace.push_back(trace_row(it, best->terms(), w));
  }
  report.incomplete = best ? std::move(best) : std::optional<IncompleteSolution>(std::move(s));
  report.iterations = it;
  report.extra.emplace_back("deletions", std::to_string(deletions));
  finish(report, w, clock);
  return report;
}

// ---------------------------------------------------------------------------
// Iterative k-decrement

namespace {

// Tabu search minimizing f2 over states with exactly |H| members: flips that
// do not merge, and swaps with candidates outside H.
bool fixed_cardinality_search(IncompleteSolution& s, const SearchParams& params, Rng& rng,
                              std::uint64_t& steps) {
  const std::size_t tenure = params.tabu_tenure ? params.tabu_tenure : 10;
  const std::size_t m = s.instance().sites();
  std::unordered_map<Haplotype, std::uint64_t, HaplotypeHash> tabu_until;
  auto is_tabu = [&](const Haplotype& h, std::uint64_t step) {
    const auto it = tabu_until.find(h);
    return it != tabu_until.end() && it->second > step;
  };
  for (std::uint64_t step = 0; step < params.max_iterations; ++step) {
    if (s.terms().f2 == 0) return true;
    ++steps;
    const CandidateSet c =
        generate_candidate_set(s, params.candidate_policy, params.candidate_size, rng);
    std::optional<std::pair<std::size_t, Haplotype>> chosen;
    std::size_t chosen_f2 = 0;
    std::size_t ties = 0;
    auto consider = [&](std::size_t pos, const Haplotype& z) {
      const std::size_t f2 = s.terms_after_replace(pos, z).f2;
      if (is_tabu(z, step) && f2 != 0) return;
      if (!chosen || f2 < chosen_f2) {
        chosen.emplace(pos, z);
        chosen_f2 = f2;
        ties = 1;
      } else if (f2 == chosen_f2 && rng.below(++ties) == 0) {
        chosen.emplace(pos, z);
      }
    };
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      for (std::size_t j = 0; j < m; ++j) {
        Haplotype h = s.member(pos);
        h.flip(j);
        if (s.contains(h) || compatibility_count(s.instance(), h) == 0) continue;
        consider(pos, h);
      }
      for (const Haplotype& z : c.haplotypes)
        if (!s.contains(z)) consider(pos, z);
    }
    if (!chosen) return false;
    tabu_until[s.member(chosen->first)] = step + tenure + rng.below(3);
    s.replace(chosen->first, chosen->second);
  }
  return s.terms().f2 == 0;
}

void remove_least_critical(IncompleteSolution& s) {
  std::size_t pick = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    const std::size_t a = s.criticality(p), b = s.criticality(pick);
    if (a < b || (a == b && s.member_compatibility(p) < s.member_compatibility(pick))) pick = p;
  }
  const Haplotype h = s.member(pick);
  s.erase(h);
}

}  // namespace

SearchReport k_feasibility_solve(const InstancePtr& instance, const SearchParams& params) {
  params.validate();
  require_incomplete(params, "kfix");
  const Clock clock(params.time_limit);
  Rng rng(params.seed);
  const CostWeights w = effective_weights(params, *instance);
  const Initializer init =
      params.initializer == Initializer::empty ? Initializer::clark : params.initializer;
  IncompleteSolution feasible = initial_incomplete(instance, init, rng);
  SearchReport report = new_report("kfix", params);
  std::uint64_t steps = 0;
  std::uint64_t levels = 0;
  while (feasible.size() > 1 && !clock.expired()) {
    IncompleteSolution s = feasible;
    remove_least_critical(s);
    ++levels;
    if (!fixed_cardinality_search(s, params, rng, steps)) break;
    feasible = std::move(s);
    if (params.trace) report.trace.push_back(trace_row(levels, feasible.terms(), w));
  }
  report.incomplete = std::move(feasible);
  report.iterations = steps;
  report.extra.emplace_back("k_reached", std::to_string(report.incomplete->size()));
  finish(report, w, clock);
  return report;
}

// ---------------------------------------------------------------------------

SearchReport solve(const InstancePtr& instance, Algorithm algo, const SearchParams& params) {
  switch (algo) {
    case Algorithm::ils:
      return ils_solve(instance, params);
    case Algorithm::dls:
      return dls_solve(instance, params);
    case Algorithm::adaptive:
      return adaptive_constructive_solve(instance, params);
    case Algorithm::kfix:
      return k_feasibility_solve(instance, params);
  }
  throw InputError("unknown algorithm");
}

SearchReport solve_with_restarts(const InstancePtr& instance, Algorithm algo,
                                 const SearchParams& params, std::size_t restarts,
                                 std::size_t threads) {
  if (restarts == 0) throw InputError("restarts must be at least 1");
  params.validate();
  const Clock clock(0);
  std::vector<std::optional<SearchReport>> runs(restarts);
  auto run_one = [&](std::size_t r) {
    SearchParams p = params;
    p.seed = derive_seed(params.seed, r);
    runs[r] = solve(instance, algo, p);
  };
  threads = std::max<std::size_t>(1, std::min(threads, restarts));
  if (threads == 1) {
    for (std::size_t r = 0; r < restarts; ++r) run_one(r);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = t; r < restarts; r += threads) run_one(r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::size_t best = 0;
  std::uint64_t iterations = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    iterations += runs[r]->iterations;
    if (r > 0 && better(runs[r]->terms(), runs[best]->terms(), runs[best]->weights)) best = r;
  }
  SearchReport out = std::move(*runs[best]);
  out.seed = params.seed;
  out.iterations = iterations;
  out.wall_ms = clock.millis();
  out.extra.emplace_back("restarts", std::to_string(restarts));
  out.extra.emplace_back("best_restart", std::to_string(best));
  return out;
}

}  // namespace hipp
