#include "hipp/init.hpp"

#include <set>

namespace hipp {

std::string to_string(Initializer init) {
  switch (init) {
    case Initializer::trivial:
      return "trivial";
    case Initializer::clark:
      return "clark";
    case Initializer::empty:
      return "empty";
  }
  return "trivial";
}

Initializer parse_initializer(const std::string& name) {
  if (name == "trivial") return Initializer::trivial;
  if (name == "clark") return Initializer::clark;
  if (name == "empty") return Initializer::empty;
  throw InputError("unknown initializer '" + name + "' (trivial|clark|empty)");
}

namespace {

// Heterozygous sites set to 0: the smallest haplotype compatible with g.
Haplotype smallest_compatible(const Genotype& g) {
  Haplotype h(g.size());
  for (std::size_t i = 0; i < h.words().size(); ++i) h.words()[i] = g.ones_mask()[i];
  return h;
}

}  // namespace

CompleteSolution trivial_complete_init(const InstancePtr& instance, Rng& rng) {
  std::vector<Haplotype> reps;
  reps.reserve(instance->size());
  for (const Genotype& g : instance->genotypes()) {
    Haplotype h(g.size());
    for (std::size_t i = 0; i < h.words().size(); ++i)
      h.words()[i] = g.ones_mask()[i] | (rng.next() & g.het_mask()[i]);
    reps.push_back(std::move(h));
  }
  return CompleteSolution(instance, std::move(reps));
}

CompleteSolution greedy_clark_init(const InstancePtr& instance) {
  const Instance& inst = *instance;
  const std::size_t n = inst.size();
  std::vector<Haplotype> reps(n);
  std::vector<bool> done(n, false);
  std::set<Haplotype> known;

  for (std::size_t i = 0; i < n; ++i) {
    if (inst[i].het_count() > 1) continue;
    reps[i] = smallest_compatible(inst[i]);
    done[i] = true;
    known.insert(reps[i]);
    known.insert(complement_unchecked(inst[i], reps[i]));
  }

  for (;;) {
    const Haplotype* best_h = nullptr;
    std::size_t best_g = 0;
    std::size_t best_compat = 0;
    // `known` iterates in lexicographic order, so strict '>' keeps the
    // smallest haplotype on ties; the inner loop keeps the smallest id.
    for (const Haplotype& h : known) {
      std::size_t first_open = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i] && compatible_unchecked(inst[i], h)) {
          first_open = i;
          break;
        }
      if (first_open == n) continue;
      const std::size_t c = compatibility_count(inst, h);
      if (best_h == nullptr || c > best_compat) {
        best_h = &h;
        best_g = first_open;
        best_compat = c;
      }
    }
    if (best_h == nullptr) break;
    const Haplotype h = *best_h;
    reps[best_g] = h;
    done[best_g] = true;
    known.insert(complement_unchecked(inst[best_g], h));
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) reps[i] = smallest_compatible(inst[i]);
  return CompleteSolution(instance, std::move(reps));
}

IncompleteSolution empty_init(const InstancePtr& instance) { return IncompleteSolution(instance); }

IncompleteSolution to_incomplete(const CompleteSolution& s) {
  return IncompleteSolution(s.instance_ptr(), s.distinct_haplotypes());
}

CompleteSolution to_complete(const IncompleteSolution& s) {
  std::vector<Haplotype> reps;
  reps.reserve(s.instance().size());
  for (std::size_t i = 0; i < s.instance().size(); ++i) {
    auto pair = s.resolving_pair(i);
    if (!pair)
      throw DomainError("genotype " + std::to_string(i + 1) + " is not resolved by the haplotype set");
    reps.push_back(std::move(pair->first));
  }
  return CompleteSolution(s.instance_ptr(), std::move(reps));
}

}  // namespace hipp
