#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hipp/solution.hpp"

namespace hipp {

struct ExactLimits {
  // Guard on the product of per-genotype pair counts.
  std::uint64_t max_states = 10'000'000;
};

struct ExactResult {
  std::size_t optimum = 0;
  CompleteSolution witness;
  std::uint64_t nodes = 0;
};

// Product of count_resolvent_pairs over the instance, saturated at
// UINT64_MAX.
std::uint64_t resolution_space_size(const Instance& instance);

// Minimum |H| by depth-first branch and bound over per-genotype pair choices.
// Throws CapacityError when resolution_space_size exceeds limits.max_states.
ExactResult exact_min_haplotypes(const InstancePtr& instance, const ExactLimits& limits = {});

// Every genotype is resolved by its assigned pair.
bool verify_solution(const Instance& instance,
                     const std::vector<std::pair<Haplotype, Haplotype>>& pairs);
bool verify_solution(const Instance& instance, const CompleteSolution& solution);

}  // namespace hipp
