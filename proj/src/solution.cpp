#include "hipp/solution.hpp"

#include <algorithm>
#include <array>

namespace hipp {

std::size_t compatibility_count(const Instance& instance, const Haplotype& h) {
  std::size_t count = 0;
  for (const Genotype& g : instance.genotypes())
    if (compatible_unchecked(g, h)) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// CompleteSolution

CompleteSolution::CompleteSolution(InstancePtr instance, std::vector<Haplotype> representatives)
    : instance_(std::move(instance)), reps_(std::move(representatives)) {
  if (!instance_) throw InputError("complete solution needs an instance");
  if (reps_.size() != instance_->size())
    throw InputError("complete solution has " + std::to_string(reps_.size()) +
                     " representatives for " + std::to_string(instance_->size()) + " genotypes");
  terms_.n = instance_->size();
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const Genotype& g = (*instance_)[i];
    if (reps_[i].size() != g.size() || !compatible_unchecked(g, reps_[i]))
      throw DomainError("representative " + reps_[i].to_string() + " does not resolve genotype " +
                        std::to_string(i + 1) + " (" + g.to_string() + ")");
    reps_[i] = canonical_representative(g, reps_[i]);
    const Haplotype k = partner(i);
    add_use(reps_[i]);
    if (k != reps_[i]) add_use(k);
  }
}

void CompleteSolution::add_use(const Haplotype& h) {
  auto [it, inserted] = entries_.try_emplace(h);
  if (inserted) {
    it->second.compat = compatibility_count(*instance_, h);
    terms_.f1 += 1;
    terms_.f3 += it->second.compat;
  }
  it->second.uses += 1;
}

void CompleteSolution::remove_use(const Haplotype& h) {
  auto it = entries_.find(h);
  if (--it->second.uses == 0) {
    terms_.f1 -= 1;
    terms_.f3 -= it->second.compat;
    entries_.erase(it);
  }
}

void CompleteSolution::assign(std::size_t i, const Haplotype& h) {
  const Genotype& g = instance_->at(i);
  if (h.size() != g.size() || !compatible_unchecked(g, h))
    throw DomainError("haplotype " + h.to_string() + " is not compatible with genotype " +
                      std::to_string(i + 1));
  const Haplotype rep = canonical_representative(g, h);
  if (rep == reps_[i]) return;
  const Haplotype old_k = partner(i);
  const Haplotype new_k = complement_unchecked(g, rep);
  // Add first so shared members never transiently drop to zero uses.
  add_use(rep);
  if (new_k != rep) add_use(new_k);
  remove_use(reps_[i]);
  if (old_k != reps_[i]) remove_use(old_k);
  reps_[i] = rep;
}

CostTerms CompleteSolution::terms_after_assign(std::size_t i, const Haplotype& h) const {
  const Genotype& g = (*instance_)[i];
  const Haplotype& old_h = reps_[i];
  const Haplotype old_k = partner(i);
  const Haplotype new_k = complement_unchecked(g, h);

  struct Change {
    const Haplotype* hap;
    int delta;
  };
  std::array<Change, 4> changes{};
  std::size_t count = 0;
  auto note = [&](const Haplotype& x, int d) {
    for (std::size_t c = 0; c < count; ++c)
      if (*changes[c].hap == x) {
        changes[c].delta += d;
        return;
      }
    changes[count++] = {&x, d};
  };
  note(old_h, -1);
  if (old_k != old_h) note(old_k, -1);
  note(h, +1);
  if (new_k != h) note(new_k, +1);

  CostTerms out = terms_;
  for (std::size_t c = 0; c < count; ++c) {
    if (changes[c].delta == 0) continue;
    const auto it = entries_.find(*changes[c].hap);
    const std::size_t before = it == entries_.end() ? 0 : it->second.uses;
    const std::size_t after = static_cast<std::size_t>(static_cast<long>(before) + changes[c].delta);
    if (before == 0 && after > 0) {
      out.f1 += 1;
      out.f3 += compatibility_count(*instance_, *changes[c].hap);
    } else if (before > 0 && after == 0) {
      out.f1 -= 1;
      out.f3 -= it->second.compat;
    }
  }
  return out;
}

std::size_t CompleteSolution::usage(const Haplotype& h) const {
  const auto it = entries_.find(h);
  return it == entries_.end() ? 0 : it->second.uses;
}

std::vector<Haplotype> CompleteSolution::distinct_haplotypes() const {
  std::vector<Haplotype> out;
  out.reserve(entries_.size());
  for (const auto& [h, e] : entries_) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// IncompleteSolution

IncompleteSolution::IncompleteSolution(InstancePtr instance) : instance_(std::move(instance)) {
  if (!instance_) throw InputError("incomplete solution needs an instance");
  support_.assign(instance_->size(), 0);
  terms_.n = instance_->size();
  terms_.f2 = instance_->size();
}

IncompleteSolution::IncompleteSolution(InstancePtr instance, const std::vector<Haplotype>& members)
    : IncompleteSolution(std::move(instance)) {
  for (const Haplotype& h : members) insert(h);
}

std::optional<std::size_t> IncompleteSolution::position(const Haplotype& h) const {
  const auto it = index_.find(h);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int IncompleteSolution::pair_contribution(std::size_t i, const Haplotype& h,
                                          const Haplotype* ignore) const {
  const Genotype& g = (*instance_)[i];
  if (!compatible_unchecked(g, h)) return 0;
  const Haplotype k = complement_unchecked(g, h);
  if (k == h) return 1;
  if (ignore != nullptr && k == *ignore) return 0;
  return contains(k) ? 2 : 0;
}

bool IncompleteSolution::insert(const Haplotype& h) {
  if (h.size() != instance_->sites())
    throw InputError("haplotype has " + std::to_string(h.size()) + " sites, expected " +
                     std::to_string(instance_->sites()));
  if (contains(h)) return false;
  const std::size_t c = compatibility_count(*instance_, h);
  if (c == 0)
    throw DomainError("haplotype " + h.to_string() + " is compatible with no genotype");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const int gain = pair_contribution(i, h, nullptr);
    if (gain == 0) continue;
    if (support_[i] == 0) terms_.f2 -= 1;
    support_[i] += static_cast<std::uint32_t>(gain);
  }
  index_.emplace(h, members_.size());
  members_.push_back(h);
  compat_.push_back(c);
  terms_.f1 += 1;
  terms_.f3 += c;
  return true;
}

void IncompleteSolution::reindex_from(std::size_t pos) {
  for (std::size_t p = pos; p < members_.size(); ++p) index_[members_[p]] = p;
}

bool IncompleteSolution::erase(const Haplotype& h) {
  const auto it = index_.find(h);
  if (it == index_.end()) return false;
  const std::size_t pos = it->second;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const int loss = pair_contribution(i, h, nullptr);
    if (loss == 0) continue;
    support_[i] -= static_cast<std::uint32_t>(loss);
    if (support_[i] == 0) terms_.f2 += 1;
  }
  terms_.f1 -= 1;
  terms_.f3 -= compat_[pos];
  index_.erase(it);
  members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(pos));
  compat_.erase(compat_.begin() + static_cast<std::ptrdiff_t>(pos));
  reindex_from(pos);
  return true;
}

void IncompleteSolution::replace(std::size_t pos, const Haplotype& h) {
  if (members_[pos] == h) return;
  if (contains(h)) {
    const Haplotype old = members_[pos];
    erase(old);
    return;
  }
  const std::size_t c = compatibility_count(*instance_, h);
  if (c == 0)
    throw DomainError("haplotype " + h.to_string() + " is compatible with no genotype");
  const Haplotype old = members_[pos];
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const int loss = pair_contribution(i, old, nullptr);
    if (loss == 0) continue;
    support_[i] -= static_cast<std::uint32_t>(loss);
    if (support_[i] == 0) terms_.f2 += 1;
  }
  index_.erase(old);
  terms_.f3 -= compat_[pos];
  members_[pos] = h;
  compat_[pos] = c;
  index_.emplace(h, pos);
  terms_.f3 += c;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const Genotype& g = (*instance_)[i];
    if (!compatible_unchecked(g, h)) continue;
    const Haplotype k = complement_unchecked(g, h);
    const int gain = k == h ? 1 : (contains(k) ? 2 : 0);
    if (gain == 0) continue;
    if (support_[i] == 0) terms_.f2 -= 1;
    support_[i] += static_cast<std::uint32_t>(gain);
  }
}

CostTerms IncompleteSolution::terms_after_insert(const Haplotype& h) const {
  CostTerms out = terms_;
  out.f1 += 1;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const Genotype& g = (*instance_)[i];
    if (!compatible_unchecked(g, h)) continue;
    out.f3 += 1;
    if (support_[i] != 0) continue;
    const Haplotype k = complement_unchecked(g, h);
    if (k == h || contains(k)) out.f2 -= 1;
  }
  return out;
}

CostTerms IncompleteSolution::terms_after_erase(std::size_t pos) const {
  const Haplotype& h = members_[pos];
  CostTerms out = terms_;
  out.f1 -= 1;
  out.f3 -= compat_[pos];
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == 0) continue;
    const int loss = pair_contribution(i, h, nullptr);
    if (loss != 0 && support_[i] == static_cast<std::uint32_t>(loss)) out.f2 += 1;
  }
  return out;
}

CostTerms IncompleteSolution::terms_after_replace(std::size_t pos, const Haplotype& h) const {
  const Haplotype& old = members_[pos];
  if (old == h) return terms_;
  if (contains(h)) return terms_after_erase(pos);
  CostTerms out = terms_;
  out.f3 -= compat_[pos];
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const Genotype& g = (*instance_)[i];
    long s = support_[i];
    s -= pair_contribution(i, old, nullptr);
    if (compatible_unchecked(g, h)) {
      out.f3 += 1;
      const Haplotype k = complement_unchecked(g, h);
      if (k == h)
        s += 1;
      else if (k != old && contains(k))
        s += 2;
    }
    const bool was = support_[i] > 0;
    const bool now = s > 0;
    if (was && !now) out.f2 += 1;
    if (!was && now) out.f2 -= 1;
  }
  return out;
}

std::vector<std::size_t> IncompleteSolution::unresolved() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support_.size(); ++i)
    if (support_[i] == 0) out.push_back(i);
  return out;
}

std::optional<std::pair<Haplotype, Haplotype>> IncompleteSolution::resolving_pair(
    std::size_t genotype) const {
  if (support_[genotype] == 0) return std::nullopt;
  const Genotype& g = (*instance_)[genotype];
  std::optional<std::pair<Haplotype, Haplotype>> best;
  for (const Haplotype& h : members_) {
    if (!compatible_unchecked(g, h)) continue;
    Haplotype k = complement_unchecked(g, h);
    if (k < h || !contains(k)) continue;
    if (!best || h < best->first) best.emplace(h, std::move(k));
  }
  return best;
}

std::size_t IncompleteSolution::usage(const Haplotype& h) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < support_.size(); ++i)
    if (pair_contribution(i, h, nullptr) != 0 && contains(h)) ++count;
  return count;
}

std::size_t IncompleteSolution::criticality(std::size_t pos) const {
  const Haplotype& h = members_[pos];
  std::size_t count = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const int loss = pair_contribution(i, h, nullptr);
    if (loss != 0 && support_[i] == static_cast<std::uint32_t>(loss)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Reference computations

HaplotypeSet distinct_haplotypes(const CompleteSolution& s) {
  HaplotypeSet out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.insert(s.representative(i));
    out.insert(s.partner(i));
  }
  return out;
}

std::vector<std::size_t> resolved_genotypes(const HaplotypeSet& h, const Instance& instance) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Genotype& g = instance[i];
    for (const Haplotype& x : h) {
      if (x.size() != g.size() || !compatible(g, x)) continue;
      if (h.count(complement(g, x)) != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::size_t f2(const HaplotypeSet& h, const Instance& instance) {
  return instance.size() - resolved_genotypes(h, instance).size();
}

std::size_t f3(const HaplotypeSet& h, const Instance& instance) {
  std::size_t total = 0;
  for (const Haplotype& x : h)
    for (const Genotype& g : instance.genotypes())
      if (x.size() == g.size() && compatible(g, x)) ++total;
  return total;
}

std::size_t f3_prime(const HaplotypeSet& h, const Instance& instance) {
  return instance.size() * h.size() - f3(h, instance);
}

CostTerms recompute_terms(const HaplotypeSet& h, const Instance& instance) {
  return CostTerms{instance.size(), h.size(), f2(h, instance), f3(h, instance)};
}

}  // namespace hipp
