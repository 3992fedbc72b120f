#include "hipp/model.hpp"

namespace hipp {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw InputError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
}

}  // namespace

Haplotype Haplotype::from_string(std::string_view text) {
  if (text.empty()) throw InputError("haplotype has no sites");
  Haplotype h(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    const char c = text[j];
    if (c == '1')
      h.set(j, true);
    else if (c != '0')
      throw InputError("haplotype site " + std::to_string(j + 1) + ": invalid symbol '" +
                       std::string(1, c) + "'");
  }
  return h;
}

std::string Haplotype::to_string() const {
  std::string out(sites_, '0');
  for (std::size_t j = 0; j < sites_; ++j)
    if (at(j)) out[j] = '1';
  return out;
}

std::strong_ordering operator<=>(const Haplotype& a, const Haplotype& b) {
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & -diff;
    return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.sites_ <=> b.sites_;
}

Genotype Genotype::from_string(std::string_view text) {
  if (text.empty()) throw InputError("genotype has no sites");
  Genotype g;
  g.sites_ = text.size();
  g.het_.assign(word_count(text.size()), 0);
  g.ones_.assign(word_count(text.size()), 0);
  for (std::size_t j = 0; j < text.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    switch (text[j]) {
      case '0':
        break;
      case '1':
        g.ones_[j >> 6] |= bit;
        break;
      case '2':
        g.het_[j >> 6] |= bit;
        break;
      default:
        throw InputError("genotype site " + std::to_string(j + 1) + ": invalid symbol '" +
                         std::string(1, text[j]) + "'");
    }
  }
  return g;
}

Genotype Genotype::from_pair(const Haplotype& h, const Haplotype& k) {
  require_same_length(h.size(), k.size(), "from_pair");
  Genotype g;
  g.sites_ = h.size();
  g.het_.resize(h.words().size());
  g.ones_.resize(h.words().size());
  for (std::size_t i = 0; i < h.words().size(); ++i) {
    g.het_[i] = h.words()[i] ^ k.words()[i];
    g.ones_[i] = h.words()[i] & k.words()[i];
  }
  return g;
}

std::size_t Genotype::het_count() const {
  std::size_t count = 0;
  for (std::uint64_t w : het_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::string Genotype::to_string() const {
  std::string out(sites_, '0');
  for (std::size_t j = 0; j < sites_; ++j) out[j] = static_cast<char>('0' + at(j));
  return out;
}

Instance::Instance(std::vector<Genotype> genotypes) : genotypes_(std::move(genotypes)) {
  if (genotypes_.empty()) throw InputError("instance has no genotypes");
  sites_ = genotypes_.front().size();
  if (sites_ == 0) throw InputError("genotypes must have at least one site");
  for (std::size_t i = 0; i < genotypes_.size(); ++i)
    if (genotypes_[i].size() != sites_)
      throw InputError("genotype " + std::to_string(i + 1) + " has " +
                       std::to_string(genotypes_[i].size()) + " sites, expected " +
                       std::to_string(sites_));
}

bool resolves(const Haplotype& h, const Haplotype& k, const Genotype& g) {
  require_same_length(h.size(), g.size(), "resolves");
  require_same_length(k.size(), g.size(), "resolves");
  const auto& het = g.het_mask();
  const auto& ones = g.ones_mask();
  for (std::size_t i = 0; i < het.size(); ++i) {
    const std::uint64_t hw = h.words()[i];
    const std::uint64_t kw = k.words()[i];
    if ((hw ^ kw) != het[i]) return false;
    if ((hw & ~het[i]) != ones[i]) return false;
  }
  return true;
}

bool compatible(const Genotype& g, const Haplotype& h) {
  require_same_length(h.size(), g.size(), "compatible");
  return compatible_unchecked(g, h);
}

bool compatible(const Genotype& a, const Genotype& b) {
  require_same_length(a.size(), b.size(), "compatible");
  for (std::size_t i = 0; i < a.het_mask().size(); ++i) {
    const std::uint64_t both_homozygous = ~(a.het_mask()[i] | b.het_mask()[i]);
    if ((a.ones_mask()[i] ^ b.ones_mask()[i]) & both_homozygous) return false;
  }
  return true;
}

Haplotype complement(const Genotype& g, const Haplotype& h) {
  if (!compatible(g, h))
    throw DomainError("haplotype " + h.to_string() + " is not compatible with genotype " +
                      g.to_string());
  return complement_unchecked(g, h);
}

std::vector<std::size_t> het_sites(const Genotype& g) {
  std::vector<std::size_t> sites;
  for (std::size_t w = 0; w < g.het_mask().size(); ++w) {
    std::uint64_t bits = g.het_mask()[w];
    while (bits) {
      sites.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return sites;
}

std::uint64_t count_resolvent_pairs(const Genotype& g) {
  const std::size_t l = g.het_count();
  if (l == 0) return 1;
  if (l - 1 >= 64)
    throw CapacityError("genotype with " + std::to_string(l) +
                        " heterozygous sites has more than 2^63 resolving pairs");
  return std::uint64_t{1} << (l - 1);
}

Haplotype canonical_representative(const Genotype& g, const Haplotype& h) {
  Haplotype k = complement(g, h);
  return k < h ? k : h;
}

}  // namespace hipp
