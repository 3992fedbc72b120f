#include <doctest.h>

#include "hipp/errors.hpp"
#include "hipp/exact.hpp"
#include "hipp/init.hpp"
#include "hipp/reduction.hpp"
#include "support.hpp"

using namespace hipp;
using ref::hap;

namespace {

CompleteSolution from_reps(const std::vector<std::string>& reps) {
  std::vector<Haplotype> hs;
  for (const auto& r : reps) hs.push_back(hap(r));
  return CompleteSolution(ref::instance(example::genotypes), hs);
}

// The printed table with g4 resolved by <f, g4 - f> = <f, e>.
CompleteSolution printed_fixed() {
  using namespace example;
  return from_reps({b_fixed, c, d, f, q});
}

CompleteSolution alt8() { return from_reps(example::alt8_reps); }

}  // namespace

TEST_CASE("sharing sets on the example solution") {
  const CompleteSolution s = printed_fixed();
  using namespace example;
  CHECK(sharing_set(s, hap(a)) == std::vector<std::size_t>{0, 1});
  CHECK(sharing_set(s, hap(f)) == std::vector<std::size_t>{3, 4});
  CHECK(sharing_set(s, hap(q)) == std::vector<std::size_t>{4});
  CHECK(sharing_set(s, hap(r)).empty());
}

TEST_CASE("predicted bound") {
  CHECK(predict_delta(1, 1, false) == -1);
  CHECK(predict_delta(2, 1, false) == 0);
  CHECK(predict_delta(1, 3, false) == 0);
  CHECK(predict_delta(2, 2, false) == 1);
  CHECK(predict_delta(2, 2, true) == 0);
  CHECK(predict_delta(1, 1, true) == -2);
  CHECK_THROWS_AS(predict_delta(0, 1, false), InputError);
}

TEST_CASE("example steps") {
  using namespace example;
  CompleteSolution sol = alt8();
  REQUIRE(sol.distinct_count() == 8);
  const ReductionStep g3 = plan_reduction(sol, 2, hap(a));
  CHECK(g3.predicted == -1);
  CHECK(g3.introduced == std::pair{hap(r), hap(a)});
  CHECK(apply_reduction(sol, g3) == -1);
  CHECK(sol.distinct_count() == 7);
  CHECK(sol.uses(hap(r)));
  CHECK_FALSE(sol.uses(hap(d)));
  CHECK_FALSE(sol.uses(hap(e)));
  CHECK(verify_solution(sol.instance(), sol));

  // g4 via a is degenerate here: a already resolves g4 together with s
  CompleteSolution t = alt8();
  CHECK(t.pair(3) == std::pair{hap(s), hap(a)});
  CHECK_THROWS_AS(plan_reduction(t, 3, hap(a)), DomainError);
  CHECK(complement(Genotype::from_string(genotypes[3]), hap(a)) == hap(s));

  // on the printed table g4 via a introduces s
  CompleteSolution p = printed_fixed();
  const ReductionStep g4 = plan_reduction(p, 3, hap(a));
  CHECK(g4.introduced == std::pair{hap(s), hap(a)});
  CHECK(g4.predicted == apply_reduction(p, g4));
}

TEST_CASE("degenerate and invalid steps") {
  using namespace example;
  CompleteSolution s = alt8();
  const CompleteSolution s0 = s;
  ReductionStep same = plan_reduction(s, 2, hap(a));
  same.introduced = s.pair(2);
  CHECK(apply_reduction(s, same) == 0);
  CHECK(s == s0);

  CHECK_THROWS_AS(plan_reduction(s, 2, hap(r)), DomainError);        // unused donor
  CHECK_THROWS_AS(plan_reduction(s, 2, hap(b_fixed)), DomainError);  // incompatible
  CHECK_THROWS_AS(plan_reduction(s, 2, hap(e)), DomainError);        // already in the pair
  CHECK_THROWS_AS(plan_reduction(s, 9, hap(a)), InputError);

  ReductionStep stale = plan_reduction(s, 2, hap(a));
  stale.replaced = {hap(a), hap(a)};
  CHECK_THROWS_AS(apply_reduction(s, stale), DomainError);
  CHECK(s == s0);

  const auto homo = ref::instance({"0101", "2101"});
  const CompleteSolution h(homo, {hap("0101"), hap("0101")});
  CHECK_THROWS_AS(plan_reduction(h, 0, hap("1101")), DomainError);
}

TEST_CASE("reduce on the example solution") {
  const ReduceResult r = reduce(alt8());
  REQUIRE_FALSE(r.log.empty());
  CHECK(r.log[0].target == 2);
  CHECK(r.log[0].introduced == hap(example::r));
  CHECK(r.log[0].distinct_after == 7);
  CHECK(r.solution.distinct_count() == 6);
  CHECK(exact_min_haplotypes(r.solution.instance_ptr()).optimum == 6);
  CHECK(format_reduce_log(r.log).rfind("g3 1110110 -1 -1 7\n", 0) == 0);
  // fixpoint
  const ReduceResult again = reduce(r.solution);
  CHECK(again.log.empty());
  CHECK(again.solution == r.solution);
}

TEST_CASE("reduce fixpoints") {
  const auto single = ref::instance({"2222"});
  const CompleteSolution one(single, {hap("0101")});
  CHECK(reduce(one).log.empty());

  // every haplotype shared, no improving step
  const auto inst = ref::instance({"22", "22"});
  const CompleteSolution s(inst, {hap("01"), hap("01")});
  const ReduceResult r = reduce(s);
  CHECK(r.log.empty());
  CHECK(r.solution == s);
}

TEST_CASE("lookahead applies a zero step that enables a negative one") {
  CHECK(parse_reduce_policy("lookahead-1") == ReducePolicy::lookahead);
  CHECK(to_string(ReducePolicy::lookahead) == "lookahead-1");
  CHECK_THROWS_AS(parse_reduce_policy("best"), InputError);
  Rng rng(41);
  std::size_t helped = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(ref::random_genotype(rng, 5));
    const auto inst = ref::instance(rows);
    const CompleteSolution s = trivial_complete_init(inst, rng);
    const ReduceResult g = reduce(s, ReducePolicy::greedy);
    const ReduceResult l = reduce(g.solution, ReducePolicy::lookahead);
    REQUIRE(l.solution.distinct_count() <= g.solution.distinct_count());
    REQUIRE(verify_solution(*inst, l.solution));
    if (l.solution.distinct_count() < g.solution.distinct_count()) ++helped;
  }
  CHECK(helped > 0);
}

TEST_CASE("measured change never exceeds the bound over 10^4 fuzzed steps") {
  Rng rng(123);
  std::size_t steps = 0, tight_cases = 0;
  while (steps < 10000) {
    const std::size_t n = 2 + rng.below(9);
    const std::size_t m = 1 + rng.below(10);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(ref::random_genotype(rng, m));
    const auto inst = ref::instance(rows);
    CompleteSolution s = trivial_complete_init(inst, rng);
    for (int k = 0; k < 30; ++k) {
      const auto all = enumerate_reductions(s);
      if (all.empty()) break;
      const ReductionStep& st = all[rng.below(all.size())];
      const std::size_t a = sharing_set(s, st.replaced.first).size();
      const std::size_t b = sharing_set(s, st.replaced.second).size();
      const Haplotype& fresh =
          st.introduced.first == st.donor ? st.introduced.second : st.introduced.first;
      const bool exists = s.uses(fresh);
      REQUIRE(st.predicted == predict_delta(a, b, exists));
      const std::size_t before = s.distinct_count();
      const int actual = apply_reduction(s, st);
      ++steps;
      REQUIRE(actual == static_cast<int>(s.distinct_count()) - static_cast<int>(before));
      REQUIRE(actual <= st.predicted);
      if (a == 1 && b == 1 && !exists) {
        ++tight_cases;
        REQUIRE(actual == -1);
      }
      REQUIRE(verify_solution(*inst, s));
    }
  }
  CHECK(tight_cases > 100);
}

TEST_CASE("reduce never increases |H| and terminates at a fixpoint") {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> rows;
    const std::size_t m = 1 + rng.below(8);
    for (std::size_t i = 0, n = 1 + rng.below(8); i < n; ++i)
      rows.push_back(ref::random_genotype(rng, m));
    const auto inst = ref::instance(rows);
    const CompleteSolution s = trivial_complete_init(inst, rng);
    for (auto policy : {ReducePolicy::greedy, ReducePolicy::lookahead}) {
      const ReduceResult r = reduce(s, policy);
      REQUIRE(r.solution.distinct_count() <= s.distinct_count());
      REQUIRE(verify_solution(*inst, r.solution));
      std::size_t size = s.distinct_count();
      for (const auto& e : r.log) {
        REQUIRE(e.actual <= e.predicted);
        REQUIRE(static_cast<int>(e.distinct_after) == static_cast<int>(size) + e.actual);
        size = e.distinct_after;
      }
      REQUIRE(reduce(r.solution, policy).log.empty());
    }
  }
}
