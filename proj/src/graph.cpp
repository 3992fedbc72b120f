#include "hipp/graph.hpp"

#include <algorithm>
#include <map>

#include "hipp/solution.hpp"

namespace hipp {

CompatibilityGraph::CompatibilityGraph(const Instance& instance)
    : adjacency_(instance.size()), matrix_(instance.size() * instance.size(), false) {
  const std::size_t n = instance.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!compatible(instance[a], instance[b])) continue;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      matrix_[a * n + b] = true;
      matrix_[b * n + a] = true;
    }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool CompatibilityGraph::adjacent(std::size_t a, std::size_t b) const {
  const std::size_t n = size();
  if (a >= n || b >= n)
    throw InputError("unknown genotype id " + std::to_string(std::max(a, b) + 1));
  return matrix_[a * n + b];
}

std::vector<std::pair<std::size_t, std::size_t>> CompatibilityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adjacency_.size(); ++a)
    for (std::size_t b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::string CompatibilityGraph::to_text() const {
  std::string out;
  for (const auto& [a, b] : edges())
    out += "g" + std::to_string(a + 1) + " g" + std::to_string(b + 1) + "\n";
  return out;
}

std::vector<std::size_t> compatible_genotype_set(const Haplotype& h, const Instance& instance) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instance.size(); ++i)
    if (compatible(instance[i], h)) out.push_back(i);
  return out;
}

bool check_clique_property(const CompatibilityGraph& graph, const std::vector<std::size_t>& ids) {
  for (std::size_t id : ids)
    if (id >= graph.size()) throw InputError("unknown genotype id " + std::to_string(id + 1));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (ids[a] != ids[b] && !graph.adjacent(ids[a], ids[b])) return false;
  return true;
}

ExtendedGraph::ExtendedGraph(const Instance& instance, const CompleteSolution& solution)
    : genotype_count_(instance.size()), genotype_graph_(instance) {
  if (solution.size() != instance.size())
    throw DomainError("solution covers " + std::to_string(solution.size()) + " of " +
                      std::to_string(instance.size()) + " genotypes");
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto [h, k] = solution.pair(i);
    if (!resolves(h, k, instance[i]))
      throw DomainError("genotype " + std::to_string(i + 1) + " is not resolved by its pair");
  }

  haplotypes_ = solution.distinct_haplotypes();
  std::map<Haplotype, std::size_t> id;
  for (std::size_t v = 0; v < haplotypes_.size(); ++v) id.emplace(haplotypes_[v], v);

  for (std::size_t v = 0; v < haplotypes_.size(); ++v)
    for (std::size_t i = 0; i < instance.size(); ++i)
      if (compatible(instance[i], haplotypes_[v])) solid_.push_back({v, i, false});

  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto [h, k] = solution.pair(i);
    if (h == k) {
      bold_.push_back({id.at(h), i, true});
    } else {
      bold_.push_back({id.at(h), i, false});
      bold_.push_back({id.at(k), i, false});
    }
  }
}

bool ExtendedGraph::feasible() const {
  std::vector<std::size_t> endpoints(genotype_count_, 0);
  for (const Edge& e : bold_) endpoints[e.genotype] += e.doubled ? 2 : 1;
  return std::all_of(endpoints.begin(), endpoints.end(), [](std::size_t c) { return c == 2; });
}

std::string ExtendedGraph::to_text() const {
  std::string out = genotype_graph_.to_text();
  for (const Edge& e : solid_) {
    const bool bold = std::find_if(bold_.begin(), bold_.end(), [&](const Edge& b) {
                        return b.haplotype == e.haplotype && b.genotype == e.genotype;
                      }) != bold_.end();
    out += "h" + std::to_string(e.haplotype + 1) + " g" + std::to_string(e.genotype + 1) +
           (bold ? " bold\n" : " solid\n");
  }
  return out;
}

}  // namespace hipp
