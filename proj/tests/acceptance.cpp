// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>

#include "hipp/errors.hpp"
#include "hipp/exact.hpp"
#include "hipp/graph.hpp"
#include "hipp/init.hpp"
#include "hipp/io.hpp"
#include "hipp/neighborhood.hpp"
#include "hipp/reduction.hpp"
#include "hipp/search.hpp"
#include "support.hpp"

using namespace hipp;
using ref::hap;

namespace {

const std::string kData = HIPP_TEST_DATA;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void note(bool ok, const std::string& what) {
  std::printf("    [%s] %s\n", ok ? "ok" : "no", what.c_str());
}

std::vector<std::string> as_strings(const IncompleteSolution& s) {
  std::vector<std::string> out;
  for (const auto& h : s.members()) out.push_back(h.to_string());
  return out;
}

// Appendix reproduction.
bool criterion1() {
  const auto t0 = Clock::now();
  bool all = true;
  auto check = [&](bool ok, const std::string& what) {
    note(ok, what);
    all = all && ok;
  };

  const auto inst =
      std::make_shared<const Instance>(parse_instance(read_file(kData + "/example.txt")));
  check(inst->size() == 5 && inst->sites() == 7, "instance parses as 5 genotypes over 7 sites");

  // The printed table with b corrected to 0010011.
  const std::string printed = read_file(kData + "/example_printed.txt");
  std::size_t printed_distinct = 0;
  {
    std::set<std::string> hs;
    for (const auto& [h, k] : example::printed_pairs) {
      hs.insert(h);
      hs.insert(k);
    }
    printed_distinct = hs.size();
  }
  check(printed_distinct == 8, "printed resolution uses 8 distinct haplotypes");
  std::string why;
  bool loads = true;
  try {
    parse_solution(printed, inst);
  } catch (const ParseError& e) {
    loads = false;
    why = e.what();
  }
  check(loads, "printed resolution (b corrected) resolves every genotype" +
                   (why.empty() ? std::string() : ": " + why));

  // Feasible 8-haplotype variant, g4 resolved by <a, s>.
  const CompleteSolution alt = parse_solution(read_file(kData + "/example_alt8.txt"), inst);
  check(alt.distinct_count() == 8 && verify_solution(*inst, alt),
        "feasible 8-haplotype variant loads");
  const ReduceResult r = reduce(alt);
  const bool g3_first = !r.log.empty() && r.log[0].target == 2 &&
                        r.log[0].introduced == hap(example::r) && r.log[0].actual == -1;
  check(g3_first, "first reduce step rewrites g3 and introduces r = 1011101");
  check(r.solution.distinct_count() == 7,
        "reduce ends with 7 distinct haplotypes (got " +
            std::to_string(r.solution.distinct_count()) + ")");

  // Alternative g4 step through a.
  bool g4_zero = false;
  std::string g4_detail;
  try {
    CompleteSolution s = alt;
    const ReductionStep st = plan_reduction(s, 3, hap(example::a));
    const int d = apply_reduction(s, st);
    g4_zero = d == 0 && st.introduced.first == hap(example::s);
    g4_detail = "delta " + std::to_string(d);
  } catch (const DomainError& e) {
    g4_detail = std::string("on the variant: ") + e.what();
  }
  {
    std::vector<Haplotype> reps;
    for (const auto& x : {example::b_fixed, example::c, example::d, example::f, example::q})
      reps.push_back(hap(x));
    CompleteSolution fixed(inst, reps);  // printed table with g4 = <f, e>
    const ReductionStep st = plan_reduction(fixed, 3, hap(example::a));
    const int d = apply_reduction(fixed, st);
    g4_detail += "; on the 7-haplotype table with g4 = <f, e>: delta " + std::to_string(d) +
                 " introducing " + st.introduced.first.to_string();
    g4_zero = g4_zero || (d == 0 && st.introduced.first == hap(example::s));
  }
  check(g4_zero, "alternative g4 step gives delta 0 with s = 1001101 (" + g4_detail + ")");

  const double secs = seconds_since(t0);
  check(secs < 1.0, "under 1 s (" + format_number(secs) + " s)");
  return all;
}

// Oracle equivalence on the tiny random suite.
bool criterion2() {
  const auto t0 = Clock::now();
  struct Engine {
    Algorithm algo;
    std::uint64_t iterations;
    std::size_t threshold;
    std::size_t matches = 0;
    std::size_t below = 0;
    std::size_t infeasible = 0;
  };
  std::vector<Engine> engines{{Algorithm::ils, 10'000, 95},
                              {Algorithm::dls, 2'000, 90},
                              {Algorithm::adaptive, 2'000, 90},
                              {Algorithm::kfix, 2'000, 95}};
  const std::size_t restarts = 10;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng gen(derive_seed(2024, k));
    const auto inst = std::make_shared<const Instance>(generate_instance(6, 8, 4, gen, 4));
    const std::size_t opt = exact_min_haplotypes(inst).optimum;
    for (Engine& e : engines) {
      SearchParams p;
      p.max_iterations = e.iterations;
      p.seed = k + 1;
      if (e.algo == Algorithm::ils) p.representation = Representation::complete;
      const SearchReport rep = solve_with_restarts(inst, e.algo, p, restarts);
      if (!rep.feasible) {
        ++e.infeasible;
        continue;
      }
      if (rep.best_size == opt) ++e.matches;
      if (rep.best_size < opt) ++e.below;
    }
  }
  bool all = true;
  for (const Engine& e : engines) {
    const bool ok = e.matches >= e.threshold && e.below == 0;
    note(ok, to_string(e.algo) + " (" + std::to_string(restarts) + " restarts x " +
                 std::to_string(e.iterations) + " iterations): " + std::to_string(e.matches) +
                 "/100 optimal, need " + std::to_string(e.threshold) + "; " +
                 std::to_string(e.below) + " below the oracle, " + std::to_string(e.infeasible) +
                 " infeasible");
    all = all && ok;
  }
  const double secs = seconds_since(t0);
  note(secs < 600, "suite time " + format_number(std::round(secs * 10) / 10) + " s, limit 600 s");
  return all && secs < 600;
}

// Algebra identities: exhaustive for m <= 6, 10^4 random cases for m <= 12.
struct AlgebraCount {
  std::size_t cases = 0;
  std::size_t failures = 0;
  void expect(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

void algebra_case(AlgebraCount& c, const std::string& gs, const std::vector<std::string>& haps) {
  const Genotype g = Genotype::from_string(gs);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& hs : haps) {
    const Haplotype h = hap(hs);
    const bool comp = ref::compatible(gs, hs);
    c.expect(compatible(g, h) == comp);
    if (comp) {
      const Haplotype k = complement(g, h);
      c.expect(k.to_string() == ref::complement(gs, hs));
      c.expect(complement(g, k) == h);
      c.expect(resolves(h, k, g));
      pairs.insert(std::minmax(hs, k.to_string()));
    }
  }
  c.expect(count_resolvent_pairs(g) == pairs.size());
  std::size_t l = 0;
  for (char ch : gs) l += ch == '2';
  c.expect(count_resolvent_pairs(g) == (l == 0 ? 1 : std::uint64_t{1} << (l - 1)));
}

void resolve_case(AlgebraCount& c, const std::string& gs, const std::string& hs,
                  const std::string& ks) {
  const Genotype g = Genotype::from_string(gs);
  const Haplotype h = hap(hs), k = hap(ks);
  const bool r = resolves(h, k, g);
  c.expect(r == ref::resolves(hs, ks, gs));
  c.expect(r == (compatible(g, h) && compatible(g, k) && complement(g, h) == k));
}

void clique_case(AlgebraCount& c, const std::vector<std::string>& rows, const std::string& hs) {
  const auto inst = ref::instance(rows);
  const CompatibilityGraph graph(*inst);
  const auto ids = compatible_genotype_set(hap(hs), *inst);
  c.expect(check_clique_property(graph, ids));
  for (std::size_t a : ids)
    for (std::size_t b : ids)
      if (a != b) c.expect(ref::compatible_gg(rows[a], rows[b]) && graph.adjacent(a, b));
}

bool criterion3() {
  AlgebraCount exhaustive, random;
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto haps = ref::all_haplotypes(m);
    const auto genos = ref::all_genotypes(m);
    for (const auto& g : genos) {
      algebra_case(exhaustive, g, haps);
      if (m <= 4)
        for (const auto& h : haps)
          for (const auto& k : haps) resolve_case(exhaustive, g, h, k);
    }
    if (m <= 5)
      for (const auto& g : genos)
        for (const auto& h : haps) resolve_case(exhaustive, g, h, ref::complement(g, h));
    // compatibility set of every haplotype in the instance of all genotypes
    if (m <= 4)
      for (const auto& h : haps) clique_case(exhaustive, genos, h);
  }
  Rng rng(20240601);
  for (int t = 0; t < 10'000; ++t) {
    const std::size_t m = 1 + rng.below(12);
    const std::string g = ref::random_genotype(rng, m);
    std::vector<std::string> haps;
    if (m <= 10) {
      haps = ref::all_haplotypes(m);
    } else {
      for (int i = 0; i < 64; ++i) haps.push_back(ref::random_haplotype(rng, m));
      // also cover the full pair count
      for (const auto& h : ref::all_haplotypes(m))
        if (ref::compatible(g, h)) haps.push_back(h);
    }
    algebra_case(random, g, haps);
    const std::string h = ref::random_haplotype(rng, m);
    resolve_case(random, g, h, ref::random_haplotype(rng, m));
    resolve_case(random, g, h, ref::complement(g, h));
    std::vector<std::string> rows;
    for (std::size_t i = 0, n = 1 + rng.below(20); i < n; ++i) rows.push_back(ref::random_genotype(rng, m));
    clique_case(random, rows, h);
  }
  note(exhaustive.failures == 0, "exhaustive m <= 6: " + std::to_string(exhaustive.cases) +
                                     " checks, " + std::to_string(exhaustive.failures) + " failures");
  note(random.failures == 0, "random m <= 12, 10^4 cases: " + std::to_string(random.cases) +
                                 " checks, " + std::to_string(random.failures) + " failures");
  return exhaustive.failures == 0 && random.failures == 0;
}

// Incremental costs against full recomputation.
bool criterion4() {
  Rng rng(909);
  std::size_t flips = 0, swaps = 0, complete_moves = 0, failures = 0, states = 0;
  auto expect = [&](bool ok) { failures += ok ? 0 : 1; };
  while (flips + swaps < 10'000 || complete_moves < 10'000) {
    const std::size_t n = 1 + rng.below(10);
    const std::size_t m = 1 + rng.below(12);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ref::random_genotype(rng, m));
    const auto inst = ref::instance(rows);
    const CostWeights w{rng.uniform(0, 2), rng.uniform(0, 10), rng.uniform(0, 1)};
    IncompleteSolution s = to_incomplete(trivial_complete_init(inst, rng));
    CompleteSolution c = trivial_complete_init(inst, rng);
    for (int step = 0; step < 25; ++step) {
      if (s.empty()) s.insert(hap(ref::random_compatible(rng, rows[0])));
      const CostTerms before = s.terms();
      if (rng.coin()) {
        const FlipMove mv{rng.below(s.size()), rng.below(m)};
        const MoveOutcome e = evaluate_flip(s, mv, w);
        const MoveOutcome a = apply_flip(s, mv, w);
        expect(e.feasible == a.feasible);
        if (a.feasible) {
          ++flips;
          const CostTerms full = recompute_terms(haplotype_set(s), *inst);
          expect(e.after == full && s.terms() == full);
          expect(e.delta == full.total(w) - before.total(w));
        }
      } else {
        const CandidateSet cs = generate_candidate_set(s, CandidatePolicy::mixed, 5, rng);
        if (!cs.empty()) {
          const DeleteInsertMove mv{s.member(rng.below(s.size())),
                                    cs.haplotypes[rng.below(cs.size())]};
          const MoveOutcome e = evaluate_delete_insert(s, mv, w);
          apply_delete_insert(s, mv, w);
          ++swaps;
          const CostTerms full = recompute_terms(haplotype_set(s), *inst);
          expect(e.after == full && s.terms() == full);
          expect(e.delta == full.total(w) - before.total(w));
        }
      }
      expect(s.terms() == ref::terms(as_strings(s), rows));
      expect(s.terms().f3 <= s.terms().n * s.terms().f1);

      const FlipMove cm{rng.below(n), rng.below(m)};
      const CostTerms cb = c.terms();
      const MoveOutcome ce = evaluate_flip(c, cm, w);
      const MoveOutcome ca = apply_flip(c, cm, w);
      expect(ce.feasible == ca.feasible);
      if (ca.feasible) {
        ++complete_moves;
        const CostTerms full = recompute_terms(distinct_haplotypes(c), *inst);
        expect(ce.after == full && c.terms() == full);
        expect(ce.delta == full.total(w) - cb.total(w));
      }
      ++states;
      expect(c.terms().f2 == 0);
      expect(c.distinct_count() <= 2 * n);
      expect(verify_solution(*inst, c));
      expect(c.terms().f3 <= c.terms().n * c.terms().f1);
    }
  }
  note(failures == 0, std::to_string(flips) + " incomplete flips, " + std::to_string(swaps) +
                          " delete/insert moves, " + std::to_string(complete_moves) +
                          " complete flips, " + std::to_string(states) + " complete states: " +
                          std::to_string(failures) + " mismatches");
  return failures == 0;
}

// Reduction bound soundness.
bool criterion5() {
  Rng rng(5150);
  std::size_t steps = 0, violations = 0, tight = 0, tight_missed = 0;
  while (steps < 10'000) {
    const std::size_t n = 2 + rng.below(9);
    const std::size_t m = 1 + rng.below(10);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ref::random_genotype(rng, m));
    const auto inst = ref::instance(rows);
    CompleteSolution s = trivial_complete_init(inst, rng);
    for (int k = 0; k < 30 && steps < 10'000; ++k) {
      const auto all = enumerate_reductions(s);
      if (all.empty()) break;
      const ReductionStep& st = all[rng.below(all.size())];
      const std::size_t a = sharing_set(s, st.replaced.first).size();
      const std::size_t b = sharing_set(s, st.replaced.second).size();
      const Haplotype& fresh =
          st.introduced.first == st.donor ? st.introduced.second : st.introduced.first;
      const bool exists = s.uses(fresh);
      const std::size_t before = s.distinct_count();
      apply_reduction(s, st);
      const int measured = static_cast<int>(s.distinct_count()) - static_cast<int>(before);
      ++steps;
      if (measured > predict_delta(a, b, exists)) ++violations;
      if (a == 1 && b == 1 && !exists) {
        ++tight;
        if (measured != -1) ++tight_missed;
      }
    }
  }
  note(violations == 0, std::to_string(steps) + " steps, " + std::to_string(violations) +
                            " above the predicted bound");
  note(tight > 0 && tight_missed == 0, std::to_string(tight) +
                                           " tight cases (single-use pair, new complement), " +
                                           std::to_string(tight_missed) + " without delta -1");
  return violations == 0 && tight > 0 && tight_missed == 0;
}

// Scripted shifting penalty.
bool criterion6() {
  const std::size_t K = 3;
  const double lo = 1.1, hi = 1.3;
  ShiftingPenalty pen(1.0, 10.0, K, lo, hi);
  Rng rng(66), script(67);
  std::size_t run = 0, decreases = 0, increases = 0, wrong = 0;
  bool positive = true;
  for (int t = 0; t < 10'000; ++t) {
    // long feasible stretches and isolated failures
    const bool feasible = t > 5'000 ? true : script.below(5) != 0;
    run = feasible ? run + 1 : 0;
    const double before = pen.w2();
    const double after = pen.update(feasible, rng);
    positive = positive && after > 0;
    const double ratio = after / before;
    if (run >= K) {
      ++decreases;
      // below the smallest normal double the floor holds w2 fixed
      if (!(after < before && ratio >= 1 / hi - 1e-12 && ratio <= 1 / lo + 1e-12) &&
          after != std::numeric_limits<double>::min())
        ++wrong;
    } else {
      ++increases;
      if (!(after > before && ratio >= lo - 1e-12 && ratio <= hi + 1e-12)) ++wrong;
    }
  }
  note(wrong == 0, std::to_string(decreases) + " decreases after K = 3 feasible outcomes, " +
                       std::to_string(increases) + " increases otherwise, " +
                       std::to_string(wrong) + " wrong");
  note(positive, "w2 positive throughout (final " + format_number(pen.w2()) + ")");
  return wrong == 0 && positive;
}

// Byte-identical output across repeated runs.
bool criterion7() {
  bool all = true;
  const auto example_inst = ref::instance(example::genotypes);
  Rng gen(derive_seed(77, 0));
  const auto random_inst = std::make_shared<const Instance>(generate_instance(8, 12, 5, gen, 3));
  for (Task t : {Task::ils, Task::dls, Task::adaptive, Task::kfix, Task::exact, Task::reduce}) {
    for (const auto& inst : {example_inst, random_inst}) {
      bool same = true;
      for (std::size_t threads : {1, 4}) {
        RunConfig c;
        c.task = t;
        c.params.seed = 12345;
        c.params.max_iterations = 300;
        c.restarts = threads == 1 ? 1 : 4;
        c.threads = threads;
        c.trace_path = "trace";
        const RunOutput a = execute(c, inst);
        const RunOutput b = execute(c, inst);
        same = same && a.solution == b.solution && a.stats == b.stats && a.log == b.log &&
               a.trace == b.trace;
      }
      note(same, to_string(t) + " on " + std::to_string(inst->size()) + "x" +
                     std::to_string(inst->sites()) + ", single and 4 parallel restarts");
      all = all && same;
    }
  }
  // through the file driver
  const auto dir = std::filesystem::temp_directory_path() / "hipp_acceptance";
  std::filesystem::create_directories(dir);
  std::string first_sol, first_stats;
  bool files_same = true;
  for (int rep = 0; rep < 2; ++rep) {
    RunConfig c;
    c.task = Task::dls;
    c.params.seed = 5;
    c.params.max_iterations = 500;
    c.restarts = 6;
    c.threads = 3;
    c.input_path = kData + "/example.txt";
    c.output_path = (dir / ("sol" + std::to_string(rep))).string();
    c.stats_path = (dir / ("stats" + std::to_string(rep))).string();
    run(c);
    const std::string sol = read_file(c.output_path), stats = read_file(c.stats_path);
    if (rep == 0) {
      first_sol = sol;
      first_stats = stats;
    } else {
      files_same = sol == first_sol && stats == first_stats;
    }
  }
  std::filesystem::remove_all(dir);
  note(files_same, "solution and stats files from two parallel runs are identical");
  return all && files_same;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"worked example reproduction", criterion1},
      {"oracle equivalence on 100 random instances", criterion2},
      {"algebra suite", criterion3},
      {"incremental cost correctness", criterion4},
      {"reduction bound soundness", criterion5},
      {"shifting penalty schedule", criterion6},
      {"determinism", criterion7}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
    }
    std::printf("%s criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
