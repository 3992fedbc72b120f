#pragma once

// Genotype/haplotype resolution algebra.
//
// Sites are 0-based in the API and 1-based in every message a user can see.
// Both sequence types pack one bit per site into 64-bit words; bits past the
// last site are always zero so whole-word comparisons are valid.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hipp/errors.hpp"

namespace hipp {

using Words = boost::container::small_vector<std::uint64_t, 2>;

inline std::size_t word_count(std::size_t sites) { return (sites + 63) / 64; }

class Haplotype {
 public:
  Haplotype() = default;
  explicit Haplotype(std::size_t sites) : words_(word_count(sites), 0), sites_(sites) {}

  // Parses a string over {0,1}; throws InputError on any other symbol.
  static Haplotype from_string(std::string_view text);

  std::size_t size() const { return sites_; }
  bool at(std::size_t site) const { return (words_[site >> 6] >> (site & 63)) & 1u; }
  void set(std::size_t site, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (site & 63);
    if (value)
      words_[site >> 6] |= bit;
    else
      words_[site >> 6] &= ~bit;
  }
  void flip(std::size_t site) { words_[site >> 6] ^= std::uint64_t{1} << (site & 63); }

  const Words& words() const { return words_; }
  Words& words() { return words_; }

  std::string to_string() const;

  friend bool operator==(const Haplotype& a, const Haplotype& b) {
    return a.sites_ == b.sites_ && a.words_ == b.words_;
  }
  // Lexicographic order of the symbol sequence, site 0 most significant.
  friend std::strong_ordering operator<=>(const Haplotype& a, const Haplotype& b);

 private:
  Words words_;
  std::size_t sites_ = 0;
};

struct HaplotypeHash {
  std::size_t operator()(const Haplotype& h) const noexcept {
    std::uint64_t x = 0x9e3779b97f4a7c15ull ^ h.size();
    for (std::uint64_t w : h.words()) {
      x ^= w + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
      x *= 0xbf58476d1ce4e5b9ull;
    }
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

class Genotype {
 public:
  Genotype() = default;

  // Parses a string over {0,1,2}; throws InputError on any other symbol.
  static Genotype from_string(std::string_view text);
  // Site-wise h ⊕ k: equal bits stay homozygous, differing bits become 2.
  static Genotype from_pair(const Haplotype& h, const Haplotype& k);

  std::size_t size() const { return sites_; }
  // Symbol at a site: 0, 1 or 2.
  int at(std::size_t site) const {
    const std::size_t w = site >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (site & 63);
    if (het_[w] & bit) return 2;
    return (ones_[w] & bit) ? 1 : 0;
  }

  // Bit set where the site is heterozygous.
  const Words& het_mask() const { return het_; }
  // Bit set where the site is homozygous 1.
  const Words& ones_mask() const { return ones_; }
  std::size_t het_count() const;

  std::string to_string() const;

  friend bool operator==(const Genotype& a, const Genotype& b) = default;

 private:
  Words het_;
  Words ones_;
  std::size_t sites_ = 0;
};

class Instance {
 public:
  // Throws InputError when empty or when lengths disagree.
  explicit Instance(std::vector<Genotype> genotypes);

  std::size_t size() const { return genotypes_.size(); }
  std::size_t sites() const { return sites_; }
  const Genotype& operator[](std::size_t i) const { return genotypes_[i]; }
  // Throws InputError for an unknown id.
  const Genotype& at(std::size_t i) const {
    if (i >= genotypes_.size())
      throw InputError("unknown genotype id " + std::to_string(i + 1));
    return genotypes_[i];
  }
  const std::vector<Genotype>& genotypes() const { return genotypes_; }

 private:
  std::vector<Genotype> genotypes_;
  std::size_t sites_ = 0;
};

// ⟨h, k⟩ resolves g. Order of h and k is irrelevant.
bool resolves(const Haplotype& h, const Haplotype& k, const Genotype& g);

// h ↦ g: h agrees with g on every homozygous site.
bool compatible(const Genotype& g, const Haplotype& h);

// Some haplotype is compatible with both genotypes.
bool compatible(const Genotype& a, const Genotype& b);

// The unique k with ⟨h, k⟩ resolving g. Throws DomainError if h is not
// compatible with g.
Haplotype complement(const Genotype& g, const Haplotype& h);

// complement() without the compatibility check.
inline Haplotype complement_unchecked(const Genotype& g, const Haplotype& h) {
  Haplotype k = h;
  auto& w = k.words();
  const auto& het = g.het_mask();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= het[i];
  return k;
}

inline bool compatible_unchecked(const Genotype& g, const Haplotype& h) {
  const auto& w = h.words();
  const auto& het = g.het_mask();
  const auto& ones = g.ones_mask();
  for (std::size_t i = 0; i < w.size(); ++i)
    if ((w[i] & ~het[i]) != ones[i]) return false;
  return true;
}

// 0-based indices of heterozygous sites, ascending.
std::vector<std::size_t> het_sites(const Genotype& g);

// Number of unordered resolving pairs: 2^(l-1) for l heterozygous sites,
// 1 when l = 0. Throws CapacityError when the count does not fit 64 bits.
std::uint64_t count_resolvent_pairs(const Genotype& g);

// The lexicographically smaller member of ⟨h, g ⊖ h⟩.
Haplotype canonical_representative(const Genotype& g, const Haplotype& h);

}  // namespace hipp

template <>
struct std::hash<hipp::Haplotype> : hipp::HaplotypeHash {};
