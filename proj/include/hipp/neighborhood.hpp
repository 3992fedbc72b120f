#pragma once

// Move generators: single-site flips (1-Hamming) and deletion/insertion
// swaps against a candidate set.
//
// Flip moves enumerate members in insertion order (genotype order for the
// complete representation), then sites in ascending order. Swap moves
// enumerate deleted members in insertion order, then candidates in order.

#include <cstddef>
#include <string>
#include <vector>

#include "hipp/rng.hpp"
#include "hipp/solution.hpp"

namespace hipp {

struct FlipMove {
  // Position in H (incomplete) or genotype id (complete).
  std::size_t member = 0;
  std::size_t site = 0;
  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

struct DeleteInsertMove {
  Haplotype deleted;
  Haplotype inserted;
};

enum class CandidatePolicy { random, heuristic, mixed };

std::string to_string(CandidatePolicy policy);
// Throws InputError on an unknown name.
CandidatePolicy parse_candidate_policy(const std::string& name);

struct CandidateSet {
  std::vector<Haplotype> haplotypes;
  CandidatePolicy policy = CandidatePolicy::mixed;
  std::size_t target = 0;

  std::size_t size() const { return haplotypes.size(); }
  bool empty() const { return haplotypes.empty(); }
};

// `feasible` is false for moves the representation forbids: a flip at a
// homozygous site (complete), or a flip/insert producing a haplotype that is
// compatible with no genotype (incomplete). `delta` is then meaningless.
struct MoveOutcome {
  bool feasible = false;
  double delta = 0.0;
  CostTerms after;
};

std::vector<FlipMove> hamming1_neighbors(const IncompleteSolution& s);
std::vector<FlipMove> hamming1_neighbors(const CompleteSolution& s);

MoveOutcome evaluate_flip(const IncompleteSolution& s, const FlipMove& mv, const CostWeights& w);
MoveOutcome evaluate_flip(const CompleteSolution& s, const FlipMove& mv, const CostWeights& w);
// Apply when feasible; the solution is untouched otherwise. In the incomplete
// representation a flip onto an existing member merges the two.
MoveOutcome apply_flip(IncompleteSolution& s, const FlipMove& mv, const CostWeights& w);
// Flips the representative bit (heterozygous sites only) and re-canonicalizes.
MoveOutcome apply_flip(CompleteSolution& s, const FlipMove& mv, const CostWeights& w);

// Up to `size` haplotypes not in H, each compatible with some genotype.
//   heuristic: complements g ⊖ h of members h against unresolved genotypes
//     (every genotype once H is feasible), most widely compatible first;
//   random: complements of random members against random compatible
//     genotypes, mixed with uniformly random compatible haplotypes;
//   mixed: ceil(size/2) heuristic, the rest random.
// Throws InputError when size is 0.
CandidateSet generate_candidate_set(const IncompleteSolution& s, CandidatePolicy policy,
                                    std::size_t size, Rng& rng);
CandidateSet generate_candidate_set(const CompleteSolution& s, CandidatePolicy policy,
                                    std::size_t size, Rng& rng);

std::vector<DeleteInsertMove> deletion_insertion_neighbors(const IncompleteSolution& s,
                                                           const CandidateSet& c);
MoveOutcome evaluate_delete_insert(const IncompleteSolution& s, const DeleteInsertMove& mv,
                                   const CostWeights& w);
// Throws DomainError if `deleted` is not a member.
MoveOutcome apply_delete_insert(IncompleteSolution& s, const DeleteInsertMove& mv,
                                const CostWeights& w);

}  // namespace hipp
