#pragma once

// Local cardinality reduction on a complete solution: resolve a target
// genotype g' through a haplotype h already used elsewhere (turning a solid
// edge of the extended graph bold), replacing its pair ⟨h', k'⟩ with
// ⟨h, g' ⊖ h⟩.
//
// With A and B the genotypes currently using h' and k', |H| changes by
//   -1 when |A| = |B| = 1, 0 when exactly one exceeds 1, +1 otherwise,
// and by one less when g' ⊖ h is already in H.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hipp/solution.hpp"

namespace hipp {

// Genotypes whose assigned pair contains h, ascending. Empty if h is unused.
std::vector<std::size_t> sharing_set(const CompleteSolution& s, const Haplotype& h);

// Throws InputError when a or b is 0.
int predict_delta(std::size_t a, std::size_t b, bool complement_exists);

struct ReductionStep {
  std::size_t target = 0;
  Haplotype donor;
  std::pair<Haplotype, Haplotype> replaced;
  std::pair<Haplotype, Haplotype> introduced;
  int predicted = 0;
};

// Builds the step re-resolving `target` through `donor`. Throws DomainError
// unless the target is heterozygous, the donor is compatible with it, used by
// another genotype, and not part of the target's current pair.
ReductionStep plan_reduction(const CompleteSolution& s, std::size_t target, const Haplotype& donor);

// Applies the step and returns the measured change of |H|. A step whose new
// pair equals the current one is a no-op returning 0. Throws DomainError (and
// leaves the solution untouched) when the step does not match the solution.
int apply_reduction(CompleteSolution& s, const ReductionStep& step);

// All valid steps: targets by id, donors by decreasing sharing-set size then
// lexicographically.
std::vector<ReductionStep> enumerate_reductions(const CompleteSolution& s);

enum class ReducePolicy { greedy, lookahead };

std::string to_string(ReducePolicy policy);
ReducePolicy parse_reduce_policy(const std::string& name);

struct ReduceLogEntry {
  std::size_t target = 0;
  Haplotype donor;
  Haplotype introduced;
  int predicted = 0;
  int actual = 0;
  std::size_t distinct_after = 0;
};

struct ReduceResult {
  CompleteSolution solution;
  std::vector<ReduceLogEntry> log;
};

// Greedy: repeatedly apply the first step with the lowest negative
// prediction. Lookahead: when none is negative, also try each zero step that
// makes a negative step available and apply the pair.
ReduceResult reduce(CompleteSolution s, ReducePolicy policy = ReducePolicy::greedy);

// "g' donor predicted actual |H|" per line, g' 1-based.
std::string format_reduce_log(const std::vector<ReduceLogEntry>& log);

}  // namespace hipp
