#include "hipp/reduction.hpp"

#include <algorithm>

namespace hipp {

std::vector<std::size_t> sharing_set(const CompleteSolution& s, const Haplotype& h) {
  std::vector<std::size_t> out;
  if (!s.uses(h)) return out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.representative(i) == h || s.partner(i) == h) out.push_back(i);
  return out;
}

int predict_delta(std::size_t a, std::size_t b, bool complement_exists) {
  if (a == 0 || b == 0) throw InputError("sharing-set sizes must be at least 1");
  int delta = 1;
  if (a == 1) --delta;
  if (b == 1) --delta;
  if (complement_exists) --delta;
  return delta;
}

ReductionStep plan_reduction(const CompleteSolution& s, std::size_t target, const Haplotype& donor) {
  const Genotype& g = s.instance().at(target);
  if (g.het_count() == 0)
    throw DomainError("genotype " + std::to_string(target + 1) + " is homozygous");
  if (donor.size() != g.size() || !compatible_unchecked(g, donor))
    throw DomainError("donor " + donor.to_string() + " is not compatible with genotype " +
                      std::to_string(target + 1));
  auto replaced = s.pair(target);
  if (donor == replaced.first || donor == replaced.second)
    throw DomainError("donor already resolves genotype " + std::to_string(target + 1));
  if (!s.uses(donor)) throw DomainError("donor " + donor.to_string() + " is not in the solution");

  ReductionStep step;
  step.target = target;
  step.donor = donor;
  Haplotype k = complement_unchecked(g, donor);
  const bool exists = s.uses(k);
  step.introduced = donor < k ? std::make_pair(donor, k) : std::make_pair(k, donor);
  step.predicted = predict_delta(s.usage(replaced.first), s.usage(replaced.second), exists);
  step.replaced = std::move(replaced);
  return step;
}

int apply_reduction(CompleteSolution& s, const ReductionStep& step) {
  const Genotype& g = s.instance().at(step.target);
  const auto current = s.pair(step.target);
  const bool same_pair = (step.introduced.first == current.first &&
                          step.introduced.second == current.second) ||
                         (step.introduced.first == current.second &&
                          step.introduced.second == current.first);
  if (same_pair) return 0;
  if (current != step.replaced)
    throw DomainError("reduction step does not match the current pair of genotype " +
                      std::to_string(step.target + 1));
  if (step.donor == current.first || step.donor == current.second)
    throw DomainError("donor already resolves genotype " + std::to_string(step.target + 1));
  if (!s.uses(step.donor))
    throw DomainError("donor " + step.donor.to_string() + " is not in the solution");
  if (step.donor.size() != g.size() || !compatible_unchecked(g, step.donor))
    throw DomainError("donor " + step.donor.to_string() + " is not compatible with genotype " +
                      std::to_string(step.target + 1));
  const std::size_t before = s.distinct_count();
  s.assign(step.target, step.donor);
  return static_cast<int>(s.distinct_count()) - static_cast<int>(before);
}

std::vector<ReductionStep> enumerate_reductions(const CompleteSolution& s) {
  std::vector<Haplotype> donors = s.distinct_haplotypes();
  std::stable_sort(donors.begin(), donors.end(), [&](const Haplotype& a, const Haplotype& b) {
    return s.usage(a) > s.usage(b);
  });
  std::vector<ReductionStep> out;
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Genotype& g = s.instance()[t];
    if (g.het_count() == 0) continue;
    const auto pair = s.pair(t);
    for (const Haplotype& h : donors) {
      if (h == pair.first || h == pair.second || !compatible_unchecked(g, h)) continue;
      out.push_back(plan_reduction(s, t, h));
    }
  }
  return out;
}

std::string to_string(ReducePolicy policy) {
  return policy == ReducePolicy::greedy ? "greedy" : "lookahead-1";
}

ReducePolicy parse_reduce_policy(const std::string& name) {
  if (name == "greedy") return ReducePolicy::greedy;
  if (name == "lookahead-1" || name == "lookahead") return ReducePolicy::lookahead;
  throw InputError("unknown reduce policy '" + name + "' (greedy|lookahead-1)");
}

namespace {

const ReductionStep* best_negative(const std::vector<ReductionStep>& steps) {
  const ReductionStep* best = nullptr;
  for (const ReductionStep& st : steps)
    if (st.predicted < 0 && (best == nullptr || st.predicted < best->predicted)) best = &st;
  return best;
}

void record(std::vector<ReduceLogEntry>& log, const ReductionStep& st, int actual,
            const CompleteSolution& s) {
  const Haplotype& intro =
      st.introduced.first == st.donor ? st.introduced.second : st.introduced.first;
  log.push_back({st.target, st.donor, intro, st.predicted, actual, s.distinct_count()});
}

}  // namespace

ReduceResult reduce(CompleteSolution s, ReducePolicy policy) {
  std::vector<ReduceLogEntry> log;
  for (;;) {
    const std::vector<ReductionStep> steps = enumerate_reductions(s);
    if (const ReductionStep* st = best_negative(steps)) {
      const int actual = apply_reduction(s, *st);
      record(log, *st, actual, s);
      continue;
    }
    if (policy != ReducePolicy::lookahead) break;

    bool applied = false;
    for (const ReductionStep& zero : steps) {
      if (zero.predicted != 0) continue;
      CompleteSolution trial = s;
      const int first = apply_reduction(trial, zero);
      const std::vector<ReductionStep> next = enumerate_reductions(trial);
      const ReductionStep* follow = best_negative(next);
      if (follow == nullptr || first + follow->predicted >= 0) continue;
      const ReductionStep second = *follow;
      s = std::move(trial);
      record(log, zero, first, s);
      const int actual = apply_reduction(s, second);
      record(log, second, actual, s);
      applied = true;
      break;
    }
    if (!applied) break;
  }
  return {std::move(s), std::move(log)};
}

std::string format_reduce_log(const std::vector<ReduceLogEntry>& log) {
  std::string out;
  for (const ReduceLogEntry& e : log)
    out += "g" + std::to_string(e.target + 1) + " " + e.donor.to_string() + " " +
           std::to_string(e.predicted) + " " + std::to_string(e.actual) + " " +
           std::to_string(e.distinct_after) + "\n";
  return out;
}

}  // namespace hipp
