#include <doctest.h>

#include <algorithm>

#include "oracle/naive.hpp"
#include "qset/errors.hpp"
#include "qset/subgroup.hpp"
#include "support.hpp"

using namespace qset;
using testing::set_of;
using testing::sub_of;

TEST_CASE("generated subgroup") {
  auto g = build_group("cyclic 12");
  CHECK(generated_subgroup(g, set_of(g, {8})).elements == set_of(g, {0, 4, 8}));
  CHECK(generated_subgroup(g, set_of(g, {4, 6})).elements == set_of(g, {0, 2, 4, 6, 8, 10}));
  CHECK(generated_subgroup(g, ElemSet(12)).order() == 1);
  auto s = build_group("symmetric 3");
  CHECK(generated_subgroup(s, set_of(s, {1, 2})).order() == 6);
}

TEST_CASE("subgroup lists") {
  auto c12 = build_group("cyclic 12");
  auto subs = all_subgroups(c12);
  CHECK(subs.size() == 6);
  // One subgroup per divisor, of that order.
  std::vector<std::size_t> orders;
  for (auto const& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 6, 12});
  CHECK(all_subgroups(build_group("cyclic 1")).size() == 1);
  CHECK(all_subgroups(build_group("symmetric 3")).size() == 6);
  CHECK(all_subgroups(build_group("symmetric 4")).size() == 30);
  CHECK(all_subgroups(build_group("dicyclic 2")).size() == 6);
  CHECK_THROWS_AS(all_subgroups(build_group("symmetric 5")), CapExceeded);
  CHECK(all_subgroups(build_group("symmetric 5"), 120).size() == 156);
}

TEST_CASE("subgroup lists agree with subset brute force") {
  for (auto spec : {"dihedral 4", "dicyclic 3", "product cyclic 2 ; cyclic 2 ; cyclic 2", "dihedral 6",
                    "perm degree=4 gens=[(2 3 1 4),(1 3 4 2)]", "product cyclic 4 ; cyclic 4"}) {
    INFO(spec);
    auto g = build_group(spec);
    auto mine = all_subgroups(g);
    REQUIRE(std::is_sorted(mine.begin(), mine.end()));
    auto ref = oracle::all_subgroups(testing::table_view(g));
    REQUIRE(mine.size() == ref.size());
    for (auto const& h : mine) {
      CHECK(std::find(ref.begin(), ref.end(), testing::to_oracle(h.elements)) != ref.end());
      CHECK(is_subgroup(g, h.elements));
    }
  }
}

TEST_CASE("normalizer against the oracle") {
  auto g = build_group("symmetric 4");
  auto view = testing::table_view(g);
  for (auto const& h : all_subgroups(g)) {
    auto n = normalizer(g, h);
    auto ref = testing::to_oracle(h.elements);
    for (Element x = 0; x < g.order(); ++x) CHECK(n.contains(x) == oracle::normalizes(view, x, ref));
  }
}

TEST_CASE("coset partitions") {
  auto g = build_group("cyclic 12");
  auto h = sub_of(g, {0, 4, 8});
  auto left = coset_partition(g, h, CosetSide::kLeft);
  REQUIRE(left.blocks.size() == 4);
  for (auto const& b : left.blocks) CHECK(b.size() == 3);
  CHECK(left.blocks[1] == set_of(g, {1, 5, 9}));

  auto s3 = build_group("dihedral 3");
  auto t = sub_of(s3, {0, 3});
  CHECK(left_coset(s3, 1, t) == set_of(s3, {1, 4}));
  CHECK(right_coset(s3, t, 1) == set_of(s3, {1, 5}));
  CHECK(double_coset(s3, t, 1) == set_of(s3, {1, 2, 4, 5}));
  CHECK(coset_partition(s3, t, CosetSide::kDouble).blocks.size() == 2);
  CHECK(coset_partition(s3, t, CosetSide::kRight).blocks.size() == 3);
}

TEST_CASE("non-subgroups are rejected") {
  auto g = build_group("cyclic 12");
  CHECK_FALSE(is_subgroup(g, set_of(g, {0, 1})));
  CHECK_FALSE(is_subgroup(g, set_of(g, {4, 8})));
  CHECK_THROWS_AS(require_subgroup(g, sub_of(g, {0, 1})), PreconditionError);
  CHECK_THROWS_AS(check_coset_lemmas(g, sub_of(g, {0, 5})), PreconditionError);
}

TEST_CASE("coset lemmas on a cyclic example") {
  auto g = build_group("cyclic 10");
  auto h = sub_of(g, {0, 5});
  // H ∪ (1+H) is not a subgroup, and 2 ∉ H: consistent with the index-two lemma.
  CHECK_FALSE(is_subgroup(g, set_of(g, {0, 5, 1, 6})));
  CHECK_FALSE(h.contains(g.mul(1, 1)));
  auto r = check_coset_lemmas(g, h);
  CHECK(r.ok());
  for (auto name : {"double_cosets", "left_right", "left_right_eq", "index_two", "small_double"})
    CHECK(r.find(name) != nullptr);
}

TEST_CASE("index-two converse needs g in the normalizer") {
  // In S3 with H = <(1 2)> and g = (1 3): g² = 1 ∈ H but H ∪ gH is not a subgroup.
  auto g = build_group("symmetric 3");
  Subgroup h{set_of(g, {0, 1})};
  REQUIRE(g.name(3) == "(1 3)");
  CHECK(g.mul(3, 3) == 0);
  CHECK_FALSE(is_subgroup(g, h.elements | left_coset(g, 3, h)));
  CHECK_FALSE(normalizer(g, h).contains(3));
  CHECK(check_coset_lemmas(g, h).ok());
}

TEST_CASE("coset lemmas hold for every subgroup of the mid-size catalog") {
  for (auto spec : {"dihedral 6", "dicyclic 4", "symmetric 4", "product symmetric 3 ; cyclic 3"}) {
    auto g = build_group(spec);
    for (auto const& h : all_subgroups(g)) {
      auto r = check_coset_lemmas(g, h);
      INFO(spec, " ", h.elements.to_string());
      CHECK(r.ok());
    }
  }
}
