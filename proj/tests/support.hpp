#pragma once

// Independent string-level reference implementations used as oracles.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hipp/model.hpp"
#include "hipp/rng.hpp"
#include "hipp/solution.hpp"

namespace ref {

inline bool resolves(const std::string& h, const std::string& k, const std::string& g) {
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] == '0' && !(h[j] == '0' && k[j] == '0')) return false;
    if (g[j] == '1' && !(h[j] == '1' && k[j] == '1')) return false;
    if (g[j] == '2' && h[j] == k[j]) return false;
  }
  return true;
}

inline bool compatible(const std::string& g, const std::string& h) {
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j] != '2' && g[j] != h[j]) return false;
  return true;
}

inline bool compatible_gg(const std::string& a, const std::string& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j] && a[j] != '2' && b[j] != '2') return false;
  return true;
}

inline std::string complement(const std::string& g, const std::string& h) {
  std::string k = h;
  for (std::size_t j = 0; j < g.size(); ++j) k[j] = g[j] == '2' ? (h[j] == '0' ? '1' : '0') : g[j];
  return k;
}

inline std::string bits(std::uint64_t x, std::size_t m) {
  std::string s(m, '0');
  for (std::size_t j = 0; j < m; ++j)
    if ((x >> j) & 1u) s[j] = '1';
  return s;
}

inline std::vector<std::string> all_haplotypes(std::size_t m) {
  std::vector<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) out.push_back(bits(x, m));
  return out;
}

inline std::vector<std::string> all_genotypes(std::size_t m) {
  std::vector<std::string> out{""};
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::string> next;
    for (const auto& p : out)
      for (char c : {'0', '1', '2'}) next.push_back(p + c);
    out = std::move(next);
  }
  return out;
}

inline std::string random_genotype(hipp::Rng& rng, std::size_t m) {
  std::string s(m, '0');
  for (auto& c : s) c = static_cast<char>('0' + rng.below(3));
  return s;
}

inline std::string random_haplotype(hipp::Rng& rng, std::size_t m) {
  std::string s(m, '0');
  for (auto& c : s) c = rng.coin() ? '1' : '0';
  return s;
}

inline std::string random_compatible(hipp::Rng& rng, const std::string& g) {
  std::string h = g;
  for (auto& c : h)
    if (c == '2') c = rng.coin() ? '1' : '0';
  return h;
}

inline hipp::InstancePtr instance(const std::vector<std::string>& rows) {
  std::vector<hipp::Genotype> gs;
  for (const auto& r : rows) gs.push_back(hipp::Genotype::from_string(r));
  return std::make_shared<const hipp::Instance>(std::move(gs));
}

inline hipp::Haplotype hap(const std::string& s) { return hipp::Haplotype::from_string(s); }

// F recomputed from scratch with the string oracles.
inline hipp::CostTerms terms(const std::vector<std::string>& H, const std::vector<std::string>& G) {
  hipp::CostTerms t;
  t.n = G.size();
  t.f1 = H.size();
  for (const auto& g : G) {
    bool resolved = false;
    for (const auto& h : H)
      for (const auto& k : H)
        if (resolves(h, k, g)) resolved = true;
    if (!resolved) ++t.f2;
  }
  for (const auto& h : H)
    for (const auto& g : G)
      if (compatible(g, h)) ++t.f3;
  return t;
}

}  // namespace ref

namespace example {

inline const std::vector<std::string> genotypes{"2210212", "2112110", "1212122", "1222122",
                                                "1202201"};
inline const std::string a = "1110110";
inline const std::string b = "0010010";  // as printed
inline const std::string b_fixed = "0010011";
inline const std::string c = "0111110";
inline const std::string d = "1111101";
inline const std::string e = "1010110";
inline const std::string f = "1101101";
inline const std::string p = "1010101";
inline const std::string q = "1000001";
inline const std::string r = "1011101";
inline const std::string s = "1001101";

// Representatives of the printed table (b corrected); g4's pair <f, p> does
// not resolve g4.
inline const std::vector<std::pair<std::string, std::string>> printed_pairs{
    {a, b_fixed}, {a, c}, {d, e}, {f, p}, {f, q}};

// A feasible 8-haplotype variant: g4 resolved by <a, s>.
inline const std::vector<std::string> alt8_reps{b_fixed, c, e, s, q};

}  // namespace example
