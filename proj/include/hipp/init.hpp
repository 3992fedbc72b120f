#pragma once

#include <string>

#include "hipp/rng.hpp"
#include "hipp/solution.hpp"

namespace hipp {

enum class Initializer { trivial, clark, empty };

std::string to_string(Initializer init);
Initializer parse_initializer(const std::string& name);

// Each genotype gets a uniformly random resolving pair.
CompleteSolution trivial_complete_init(const InstancePtr& instance, Rng& rng);

// Clark-style rule resolution. Genotypes with at most one heterozygous site
// are resolved first, then known haplotypes are propagated: at each step the
// (genotype, known haplotype) pair with the most widely compatible haplotype
// is taken (ties: smaller haplotype, then smaller genotype id) and the
// complement becomes known. Leftovers get their smallest resolving pair.
CompleteSolution greedy_clark_init(const InstancePtr& instance);

IncompleteSolution empty_init(const InstancePtr& instance);

// H of the complete solution, members in lexicographic order.
IncompleteSolution to_incomplete(const CompleteSolution& s);

// One resolving pair per genotype drawn from H (the lexicographically
// smallest). Throws DomainError when some genotype is unresolved.
CompleteSolution to_complete(const IncompleteSolution& s);

}  // namespace hipp
