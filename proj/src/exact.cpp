#include "hipp/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "hipp/init.hpp"

namespace hipp {

std::uint64_t resolution_space_size(const Instance& instance) {
  std::uint64_t product = 1;
  for (const Genotype& g : instance.genotypes()) {
    const std::size_t l = g.het_count();
    const std::size_t shift = l == 0 ? 0 : l - 1;
    if (shift >= 64 || product > (std::numeric_limits<std::uint64_t>::max() >> shift))
      return std::numeric_limits<std::uint64_t>::max();
    product <<= shift;
  }
  return product;
}

namespace {

struct Option {
  std::uint32_t first;
  std::uint32_t second;  // equals first for a homozygous genotype
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, std::size_t incumbent)
      : instance_(instance), best_(incumbent) {
    order_.resize(instance.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return instance[a].het_count() > instance[b].het_count();
    });
    options_.resize(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) enumerate_options(i);
    counts_.assign(interned_.size(), 0);
    choice_.assign(instance.size(), 0);
  }

  void run() { descend(0, 0); }

  std::size_t best() const { return best_; }
  bool improved() const { return !best_choice_.empty(); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<Haplotype> witness() const {
    std::vector<Haplotype> reps(instance_.size());
    for (std::size_t i = 0; i < instance_.size(); ++i)
      reps[i] = interned_[options_[i][best_choice_[i]].first];
    return reps;
  }

 private:
  std::uint32_t intern(const Haplotype& h) {
    auto [it, inserted] = ids_.try_emplace(h, static_cast<std::uint32_t>(interned_.size()));
    if (inserted) interned_.push_back(h);
    return it->second;
  }

  // Canonical representatives have 0 at the first heterozygous site.
  void enumerate_options(std::size_t i) {
    const Genotype& g = instance_[i];
    const std::vector<std::size_t> het = het_sites(g);
    Haplotype base(g.size());
    for (std::size_t w = 0; w < base.words().size(); ++w) base.words()[w] = g.ones_mask()[w];
    const std::size_t free = het.empty() ? 0 : het.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
      Haplotype h = base;
      for (std::size_t b = 0; b < free; ++b)
        if ((mask >> b) & 1u) h.set(het[b + 1], true);
      const Haplotype k = complement_unchecked(g, h);
      options_[i].push_back({intern(h), intern(k)});
    }
  }

  std::size_t added_by(const Option& o) const {
    std::size_t added = counts_[o.first] == 0 ? 1 : 0;
    if (o.second != o.first && counts_[o.second] == 0) ++added;
    return added;
  }

  void descend(std::size_t depth, std::size_t distinct) {
    ++nodes_;
    if (depth == order_.size()) {
      best_ = distinct;
      best_choice_ = choice_;
      return;
    }
    const std::size_t g = order_[depth];
    const auto& opts = options_[g];
    // Options adding fewer new haplotypes are tried first.
    for (std::size_t added = 0; added <= 2; ++added) {
      if (distinct + added >= best_) return;
      for (std::size_t o = 0; o < opts.size(); ++o) {
        if (added_by(opts[o]) != added) continue;
        ++counts_[opts[o].first];
        if (opts[o].second != opts[o].first) ++counts_[opts[o].second];
        choice_[g] = o;
        descend(depth + 1, distinct + added);
        --counts_[opts[o].first];
        if (opts[o].second != opts[o].first) --counts_[opts[o].second];
        if (distinct + added >= best_) return;
      }
    }
  }

  const Instance& instance_;
  std::size_t best_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Option>> options_;
  std::unordered_map<Haplotype, std::uint32_t, HaplotypeHash> ids_;
  std::vector<Haplotype> interned_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_min_haplotypes(const InstancePtr& instance, const ExactLimits& limits) {
  const std::uint64_t space = resolution_space_size(*instance);
  if (space > limits.max_states)
    throw CapacityError("resolution space has " +
                        (space == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(space)) +
                        " pair combinations, above the limit of " +
                        std::to_string(limits.max_states));

  CompleteSolution incumbent = greedy_clark_init(instance);
  BranchAndBound search(*instance, incumbent.distinct_count());
  search.run();
  if (!search.improved()) return {incumbent.distinct_count(), std::move(incumbent), search.nodes()};
  CompleteSolution witness(instance, search.witness());
  return {search.best(), std::move(witness), search.nodes()};
}

bool verify_solution(const Instance& instance,
                     const std::vector<std::pair<Haplotype, Haplotype>>& pairs) {
  if (pairs.size() != instance.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Genotype& g = instance[i];
    if (pairs[i].first.size() != g.size() || pairs[i].second.size() != g.size()) return false;
    if (!resolves(pairs[i].first, pairs[i].second, g)) return false;
  }
  return true;
}

bool verify_solution(const Instance& instance, const CompleteSolution& solution) {
  std::vector<std::pair<Haplotype, Haplotype>> pairs;
  pairs.reserve(solution.size());
  for (std::size_t i = 0; i < solution.size(); ++i) pairs.push_back(solution.pair(i));
  return verify_solution(instance, pairs);
}

}  // namespace hipp
