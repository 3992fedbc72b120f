#pragma once

// The two search-space representations and the weighted cost
//   F = alpha1 * f1 + alpha2 * f2 + alpha3 * f3'
// where f1 = |H|, f2 = unresolved genotypes, f3 = sum over H of compatible
// genotype counts and f3' = n|H| - f3.
//
// Both solution classes cache the integer cost terms and update them per
// move. The free functions at the bottom recompute everything from a plain
// haplotype set and exist as the reference the caches are tested against.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hipp/model.hpp"

namespace hipp {

using InstancePtr = std::shared_ptr<const Instance>;
using HaplotypeSet = std::set<Haplotype>;

struct CostWeights {
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double alpha3 = 0.01;

  static CostWeights complete_defaults() { return {1.0, 0.0, 0.01}; }
  // alpha2 = 4n dominates the other terms (|H| <= 2n, f3'/100 <= 2n^2/100).
  static CostWeights incomplete_defaults(std::size_t n) {
    return {1.0, 4.0 * static_cast<double>(n), 0.01};
  }
};

struct CostTerms {
  std::size_t n = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  std::size_t f3 = 0;

  std::size_t f3_prime() const { return n * f1 - f3; }
  double total(const CostWeights& w) const {
    return w.alpha1 * static_cast<double>(f1) + w.alpha2 * static_cast<double>(f2) +
           w.alpha3 * static_cast<double>(f3_prime());
  }
  bool feasible() const { return f2 == 0; }

  friend bool operator==(const CostTerms&, const CostTerms&) = default;
};

// Number of instance genotypes compatible with h.
std::size_t compatibility_count(const Instance& instance, const Haplotype& h);

// One resolving pair per genotype, stored as the lexicographically smaller
// representative. Every genotype is resolved at all times.
class CompleteSolution {
 public:
  // Representatives may be either member of each pair; they are canonicalized.
  // Throws InputError on a count mismatch, DomainError on incompatibility.
  CompleteSolution(InstancePtr instance, std::vector<Haplotype> representatives);

  const Instance& instance() const { return *instance_; }
  const InstancePtr& instance_ptr() const { return instance_; }
  std::size_t size() const { return reps_.size(); }

  const Haplotype& representative(std::size_t i) const { return reps_[i]; }
  Haplotype partner(std::size_t i) const {
    return complement_unchecked((*instance_)[i], reps_[i]);
  }
  std::pair<Haplotype, Haplotype> pair(std::size_t i) const { return {reps_[i], partner(i)}; }

  // Resolve genotype i with ⟨h, g_i ⊖ h⟩. Throws DomainError if h ↦ g_i fails.
  void assign(std::size_t i, const Haplotype& h);
  // Cost terms assign(i, h) would produce; h must be compatible with g_i.
  CostTerms terms_after_assign(std::size_t i, const Haplotype& h) const;

  // Genotypes whose pair contains h.
  std::size_t usage(const Haplotype& h) const;
  bool uses(const Haplotype& h) const { return usage(h) > 0; }
  std::size_t distinct_count() const { return entries_.size(); }
  // Sorted lexicographically.
  std::vector<Haplotype> distinct_haplotypes() const;

  const CostTerms& terms() const { return terms_; }

  friend bool operator==(const CompleteSolution& a, const CompleteSolution& b) {
    return a.instance_ == b.instance_ && a.reps_ == b.reps_;
  }

 private:
  struct Entry {
    std::size_t uses = 0;
    std::size_t compat = 0;
  };

  void add_use(const Haplotype& h);
  void remove_use(const Haplotype& h);

  InstancePtr instance_;
  std::vector<Haplotype> reps_;
  std::unordered_map<Haplotype, Entry, HaplotypeHash> entries_;
  CostTerms terms_;
};

// A set H of distinct haplotypes kept in insertion order. A genotype is
// resolved when some h in H has its complement in H as well.
class IncompleteSolution {
 public:
  explicit IncompleteSolution(InstancePtr instance);
  // Throws DomainError if a member is compatible with no genotype.
  IncompleteSolution(InstancePtr instance, const std::vector<Haplotype>& members);

  const Instance& instance() const { return *instance_; }
  const InstancePtr& instance_ptr() const { return instance_; }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Haplotype>& members() const { return members_; }
  const Haplotype& member(std::size_t pos) const { return members_[pos]; }
  bool contains(const Haplotype& h) const { return index_.find(h) != index_.end(); }
  std::optional<std::size_t> position(const Haplotype& h) const;
  std::size_t member_compatibility(std::size_t pos) const { return compat_[pos]; }

  // Appends h. Returns false if already present. Throws DomainError if h is
  // compatible with no genotype.
  bool insert(const Haplotype& h);
  // Returns false if h was not present. Preserves the order of the others.
  bool erase(const Haplotype& h);
  // Replaces the member at `pos` in place; if `h` is already a member the two
  // merge and |H| shrinks. Throws DomainError if h is compatible with nothing.
  void replace(std::size_t pos, const Haplotype& h);

  // Cost terms after the corresponding mutation, computed without mutating.
  // `h` in terms_after_insert must not be a member.
  CostTerms terms_after_insert(const Haplotype& h) const;
  CostTerms terms_after_erase(std::size_t pos) const;
  CostTerms terms_after_replace(std::size_t pos, const Haplotype& h) const;

  bool resolved(std::size_t genotype) const { return support_[genotype] > 0; }
  std::vector<std::size_t> unresolved() const;
  // Lexicographically smallest resolving pair (h <= k) drawn from H.
  std::optional<std::pair<Haplotype, Haplotype>> resolving_pair(std::size_t genotype) const;
  // Genotypes for which h belongs to at least one resolving pair in H.
  std::size_t usage(const Haplotype& h) const;
  // Genotypes that would become unresolved if h were removed.
  std::size_t criticality(std::size_t pos) const;

  const CostTerms& terms() const { return terms_; }

  friend bool operator==(const IncompleteSolution& a, const IncompleteSolution& b) {
    return a.instance_ == b.instance_ && a.members_ == b.members_;
  }

 private:
  // Ordered-pair count change at genotype i when h joins (sign +1) or leaves
  // (sign -1) H; `ignore` is treated as absent from H.
  int pair_contribution(std::size_t i, const Haplotype& h, const Haplotype* ignore) const;
  void reindex_from(std::size_t pos);

  InstancePtr instance_;
  std::vector<Haplotype> members_;
  std::unordered_map<Haplotype, std::size_t, HaplotypeHash> index_;
  std::vector<std::size_t> compat_;
  std::vector<std::uint32_t> support_;
  CostTerms terms_;
};

// Reference computations over plain sets.

HaplotypeSet distinct_haplotypes(const CompleteSolution& s);
inline std::size_t f1(const HaplotypeSet& h) { return h.size(); }
std::vector<std::size_t> resolved_genotypes(const HaplotypeSet& h, const Instance& instance);
std::size_t f2(const HaplotypeSet& h, const Instance& instance);
std::size_t f3(const HaplotypeSet& h, const Instance& instance);
std::size_t f3_prime(const HaplotypeSet& h, const Instance& instance);
CostTerms recompute_terms(const HaplotypeSet& h, const Instance& instance);

inline HaplotypeSet haplotype_set(const IncompleteSolution& s) {
  return HaplotypeSet(s.members().begin(), s.members().end());
}

inline double total_cost(const CompleteSolution& s, const CostWeights& w) {
  return s.terms().total(w);
}
inline double total_cost(const IncompleteSolution& s, const CostWeights& w) {
  return s.terms().total(w);
}

}  // namespace hipp
