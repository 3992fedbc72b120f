#include "hipp/neighborhood.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace hipp {

std::string to_string(CandidatePolicy policy) {
  switch (policy) {
    case CandidatePolicy::random:
      return "random";
    case CandidatePolicy::heuristic:
      return "heuristic";
    case CandidatePolicy::mixed:
      return "mixed";
  }
  return "mixed";
}

CandidatePolicy parse_candidate_policy(const std::string& name) {
  if (name == "random") return CandidatePolicy::random;
  if (name == "heuristic") return CandidatePolicy::heuristic;
  if (name == "mixed") return CandidatePolicy::mixed;
  throw InputError("unknown candidate policy '" + name + "' (random|heuristic|mixed)");
}

namespace {

bool any_compatible(const Instance& instance, const Haplotype& h) {
  for (const Genotype& g : instance.genotypes())
    if (compatible_unchecked(g, h)) return true;
  return false;
}

MoveOutcome outcome(const CostTerms& before, const CostTerms& after, const CostWeights& w) {
  return {true, after.total(w) - before.total(w), after};
}

}  // namespace

// ---------------------------------------------------------------------------
// 1-Hamming

std::vector<FlipMove> hamming1_neighbors(const IncompleteSolution& s) {
  std::vector<FlipMove> out;
  out.reserve(s.size() * s.instance().sites());
  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t j = 0; j < s.instance().sites(); ++j) out.push_back({p, j});
  return out;
}

std::vector<FlipMove> hamming1_neighbors(const CompleteSolution& s) {
  std::vector<FlipMove> out;
  out.reserve(s.size() * s.instance().sites());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.instance().sites(); ++j) out.push_back({i, j});
  return out;
}

MoveOutcome evaluate_flip(const IncompleteSolution& s, const FlipMove& mv, const CostWeights& w) {
  if (mv.member >= s.size() || mv.site >= s.instance().sites()) return {};
  Haplotype h = s.member(mv.member);
  h.flip(mv.site);
  if (!s.contains(h) && !any_compatible(s.instance(), h)) return {};
  return outcome(s.terms(), s.terms_after_replace(mv.member, h), w);
}

MoveOutcome evaluate_flip(const CompleteSolution& s, const FlipMove& mv, const CostWeights& w) {
  if (mv.member >= s.size() || mv.site >= s.instance().sites()) return {};
  if (s.instance()[mv.member].at(mv.site) != 2) return {};
  Haplotype h = s.representative(mv.member);
  h.flip(mv.site);
  return outcome(s.terms(), s.terms_after_assign(mv.member, h), w);
}

MoveOutcome apply_flip(IncompleteSolution& s, const FlipMove& mv, const CostWeights& w) {
  if (mv.member >= s.size() || mv.site >= s.instance().sites()) return {};
  Haplotype h = s.member(mv.member);
  h.flip(mv.site);
  if (!s.contains(h) && !any_compatible(s.instance(), h)) return {};
  const CostTerms before = s.terms();
  s.replace(mv.member, h);
  return outcome(before, s.terms(), w);
}

MoveOutcome apply_flip(CompleteSolution& s, const FlipMove& mv, const CostWeights& w) {
  if (mv.member >= s.size() || mv.site >= s.instance().sites()) return {};
  if (s.instance()[mv.member].at(mv.site) != 2) return {};
  Haplotype h = s.representative(mv.member);
  h.flip(mv.site);
  const CostTerms before = s.terms();
  s.assign(mv.member, h);
  return outcome(before, s.terms(), w);
}

// ---------------------------------------------------------------------------
// Candidate sets

namespace {

struct CandidateContext {
  const Instance& instance;
  const std::vector<Haplotype>& members;
  std::vector<std::size_t> targets;
  std::function<bool(const Haplotype&)> in_solution;
};

void heuristic_candidates(const CandidateContext& ctx, std::size_t size,
                          std::unordered_set<Haplotype, HaplotypeHash>& seen,
                          std::vector<Haplotype>& out) {
  struct Ranked {
    Haplotype h;
    std::size_t compat;
  };
  std::vector<Ranked> pool;
  for (std::size_t i : ctx.targets) {
    const Genotype& g = ctx.instance[i];
    for (const Haplotype& h : ctx.members) {
      if (!compatible_unchecked(g, h)) continue;
      Haplotype k = complement_unchecked(g, h);
      if (ctx.in_solution(k) || seen.count(k) != 0) continue;
      seen.insert(k);
      const std::size_t c = compatibility_count(ctx.instance, k);
      pool.push_back({std::move(k), c});
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Ranked& a, const Ranked& b) {
    if (a.compat != b.compat) return a.compat > b.compat;
    return a.h < b.h;
  });
  // Unranked leftovers are released so the random fill may still draw them.
  for (std::size_t r = 0; r < pool.size(); ++r) {
    if (out.size() < size)
      out.push_back(std::move(pool[r].h));
    else
      seen.erase(pool[r].h);
  }
}

Haplotype random_compatible(const Genotype& g, Rng& rng) {
  Haplotype h(g.size());
  auto& w = h.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = g.ones_mask()[i] | (rng.next() & g.het_mask()[i]);
  return h;
}

void random_candidates(const CandidateContext& ctx, std::size_t size, Rng& rng,
                       std::unordered_set<Haplotype, HaplotypeHash>& seen,
                       std::vector<Haplotype>& out) {
  const Instance& inst = ctx.instance;
  std::vector<std::size_t> compat_ids;
  // Stops early once 8 + size/8 draws in a row produced nothing new.
  const std::size_t attempts = 8 * size + 8;
  const std::size_t patience = 8 + size / 8;
  std::size_t misses = 0;
  for (std::size_t a = 0; a < attempts && out.size() < size && misses < patience; ++a) {
    ++misses;
    Haplotype k;
    if (!ctx.members.empty() && rng.coin()) {
      const Haplotype& h = ctx.members[rng.below(ctx.members.size())];
      compat_ids.clear();
      for (std::size_t i = 0; i < inst.size(); ++i)
        if (compatible_unchecked(inst[i], h)) compat_ids.push_back(i);
      if (compat_ids.empty()) continue;
      k = complement_unchecked(inst[compat_ids[rng.below(compat_ids.size())]], h);
    } else {
      k = random_compatible(inst[rng.below(inst.size())], rng);
    }
    if (ctx.in_solution(k) || seen.count(k) != 0) continue;
    seen.insert(k);
    out.push_back(std::move(k));
    misses = 0;
  }
}

CandidateSet generate(const CandidateContext& ctx, CandidatePolicy policy, std::size_t size,
                      Rng& rng) {
  if (size == 0) throw InputError("candidate set size must be at least 1");
  CandidateSet c;
  c.policy = policy;
  c.target = size;
  std::unordered_set<Haplotype, HaplotypeHash> seen;
  switch (policy) {
    case CandidatePolicy::heuristic:
      heuristic_candidates(ctx, size, seen, c.haplotypes);
      break;
    case CandidatePolicy::random:
      random_candidates(ctx, size, rng, seen, c.haplotypes);
      break;
    case CandidatePolicy::mixed:
      heuristic_candidates(ctx, (size + 1) / 2, seen, c.haplotypes);
      random_candidates(ctx, size, rng, seen, c.haplotypes);
      break;
  }
  return c;
}

std::vector<std::size_t> all_ids(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

CandidateSet generate_candidate_set(const IncompleteSolution& s, CandidatePolicy policy,
                                    std::size_t size, Rng& rng) {
  std::vector<std::size_t> targets = s.unresolved();
  if (targets.empty()) targets = all_ids(s.instance().size());
  CandidateContext ctx{s.instance(), s.members(), std::move(targets),
                       [&s](const Haplotype& h) { return s.contains(h); }};
  return generate(ctx, policy, size, rng);
}

CandidateSet generate_candidate_set(const CompleteSolution& s, CandidatePolicy policy,
                                    std::size_t size, Rng& rng) {
  const std::vector<Haplotype> members = s.distinct_haplotypes();
  CandidateContext ctx{s.instance(), members, all_ids(s.instance().size()),
                       [&s](const Haplotype& h) { return s.uses(h); }};
  return generate(ctx, policy, size, rng);
}

// ---------------------------------------------------------------------------
// Deletion/insertion

std::vector<DeleteInsertMove> deletion_insertion_neighbors(const IncompleteSolution& s,
                                                           const CandidateSet& c) {
  std::vector<DeleteInsertMove> out;
  out.reserve(s.size() * c.size());
  for (const Haplotype& d : s.members())
    for (const Haplotype& z : c.haplotypes) out.push_back({d, z});
  return out;
}

MoveOutcome evaluate_delete_insert(const IncompleteSolution& s, const DeleteInsertMove& mv,
                                   const CostWeights& w) {
  const auto pos = s.position(mv.deleted);
  if (!pos) return {};
  if (!s.contains(mv.inserted) && !any_compatible(s.instance(), mv.inserted)) return {};
  return outcome(s.terms(), s.terms_after_replace(*pos, mv.inserted), w);
}

MoveOutcome apply_delete_insert(IncompleteSolution& s, const DeleteInsertMove& mv,
                                const CostWeights& w) {
  const auto pos = s.position(mv.deleted);
  if (!pos)
    throw DomainError("haplotype " + mv.deleted.to_string() + " is not in the solution");
  if (!s.contains(mv.inserted) && !any_compatible(s.instance(), mv.inserted)) return {};
  const CostTerms before = s.terms();
  s.replace(*pos, mv.inserted);
  return outcome(before, s.terms(), w);
}

}  // namespace hipp
