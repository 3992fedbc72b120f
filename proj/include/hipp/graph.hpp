#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hipp/model.hpp"

namespace hipp {

class CompleteSolution;

// Genotype compatibility graph. Built once per instance, never mutated.
class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(const Instance& instance);

  std::size_t size() const { return adjacency_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  // Edges (a, b) with a < b, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // One "gA gB" line per edge, 1-based ids.
  std::string to_text() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> matrix_;
};

inline CompatibilityGraph build_compatibility_graph(const Instance& instance) {
  return CompatibilityGraph(instance);
}

// Ids of all genotypes h is compatible with, ascending.
std::vector<std::size_t> compatible_genotype_set(const Haplotype& h, const Instance& instance);

// Every pair of ids in `ids` is adjacent. Throws InputError on unknown ids.
bool check_clique_property(const CompatibilityGraph& graph, const std::vector<std::size_t>& ids);

// Bipartite haplotype/genotype graph for a complete solution. Solid edges are
// compatibilities, bold edges the assigned resolutions. A genotype resolved by
// ⟨h, h⟩ carries one bold edge flagged as doubled.
class ExtendedGraph {
 public:
  struct Edge {
    std::size_t haplotype;
    std::size_t genotype;
    bool doubled = false;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // Throws DomainError when the solution does not resolve every genotype.
  ExtendedGraph(const Instance& instance, const CompleteSolution& solution);

  const std::vector<Haplotype>& haplotypes() const { return haplotypes_; }
  const std::vector<Edge>& solid_edges() const { return solid_; }
  const std::vector<Edge>& bold_edges() const { return bold_; }
  const CompatibilityGraph& genotype_graph() const { return genotype_graph_; }

  // Every genotype has exactly two bold endpoints counting multiplicity.
  bool feasible() const;

  // "gA gB" lines for the genotype graph, then "hI gJ solid|bold" lines.
  // Haplotype ids are 1-based positions in haplotypes().
  std::string to_text() const;

 private:
  std::vector<Haplotype> haplotypes_;
  std::vector<Edge> solid_;
  std::vector<Edge> bold_;
  std::size_t genotype_count_;
  CompatibilityGraph genotype_graph_;
};

inline ExtendedGraph build_extended_graph(const Instance& instance,
                                          const CompleteSolution& solution) {
  return ExtendedGraph(instance, solution);
}

}  // namespace hipp
