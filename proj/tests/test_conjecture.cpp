#include <doctest.h>

#include "qset/conjecture.hpp"
#include "qset/errors.hpp"
#include "qset/set_algebra.hpp"
#include "support.hpp"

using namespace qset;
using testing::set_of;
using testing::sub_of;

TEST_CASE("two-coset witness in Z/12") {
  auto g = build_group("cyclic 12");
  auto a = set_of(g, {0, 4, 8, 1, 5, 9});
  auto w = find_structure_witness(g, a, 2, all_subgroups(g));
  REQUIRE(w);
  CHECK(w->h.elements == set_of(g, {0, 4, 8}));
  CHECK(w->base == set_of(g, {0, 1}));
  CHECK(w->valid());
  CHECK(quotient_set(g, a).size() == 3 * 3);
  // n = 1 allows a single coset only.
  CHECK_FALSE(find_structure_witness(g, a, 1, all_subgroups(g)));
}

TEST_CASE("threshold set has no witness") {
  auto g = build_group("cyclic 7");
  CHECK_FALSE(find_structure_witness(g, set_of(g, {0, 1, 6}), 2, all_subgroups(g)));
  CHECK_FALSE(find_structure_witness(g, set_of(g, {0, 1, 6}), 2, all_subgroups(g), WitnessMode::kHypotheses));
}

TEST_CASE("clause evaluation") {
  auto g = build_group("cyclic 12");
  auto a = set_of(g, {0, 4, 8, 1, 5, 9});
  auto c = evaluate_clauses(g, a, sub_of(g, {0, 4, 8}), set_of(g, {0, 1}), 2);
  CHECK(c.small_base);
  CHECK(c.one_normalizer_coset);
  CHECK(c.covered);
  CHECK(c.distinct_cosets);
  CHECK(c.dense);
  CHECK(c.quotient_shape);
  CHECK(c.quotient_size);
  CHECK(c.density_bracket);
  // Two representatives of the same coset.
  auto bad = evaluate_clauses(g, a, sub_of(g, {0, 4, 8}), set_of(g, {0, 4}), 2);
  CHECK_FALSE(bad.covered);
  CHECK_FALSE(bad.distinct_cosets);
  CHECK_THROWS_AS(evaluate_clauses(g, ElemSet(12), sub_of(g, {0}), set_of(g, {0}), 2), PreconditionError);
}

TEST_CASE("cyclic 16 scans are clean for n = 1 and 2") {
  auto g = build_group("cyclic 16");
  for (unsigned n : {1U, 2U}) {
    auto r = conjecture_scan(g, n, {});
    INFO("n=", n);
    CHECK(r.counterexamples.empty());
    CHECK(r.sharpness_violations.empty());
    CHECK(r.in_range == r.witnessed);
    CHECK_FALSE(r.fatal);
    CHECK(r.clean());
  }
}

TEST_CASE("n = 3 scan completes") {
  auto g = build_group("cyclic 12");
  auto r = conjecture_scan(g, 3, {});
  CHECK(r.canonical_classes == 351);
  CHECK(r.in_range >= r.witnessed);
  CHECK(r.in_range == r.witnessed + r.counterexamples.size());
}

TEST_CASE("dihedral two-coset sets surface as n = 2 candidates") {
  auto g = build_group("dihedral 4");
  auto r = conjecture_scan(g, 2, {});
  CHECK(r.counterexamples ==
        std::vector<std::string>{"{0, 1, 4, 5}", "{0, 3, 4, 5}", "{0, 3, 5, 6}", "{0, 1, 4, 7}"});
  CHECK(r.fatal);
  CHECK_THROWS_AS(conjecture_scan(g, 0, {}), PreconditionError);
}
