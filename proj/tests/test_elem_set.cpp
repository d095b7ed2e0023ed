#include <doctest.h>

#include "qset/elem_set.hpp"
#include "qset/errors.hpp"

using qset::ElemSet;

TEST_CASE("membership, size and literal") {
  auto s = ElemSet::of(12, {8, 0, 4, 4});
  CHECK(s.size() == 3);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK_FALSE(s.contains(99));
  CHECK(s.min() == 0);
  CHECK(s.to_string() == "{0, 4, 8}");
  CHECK(ElemSet(5).to_string() == "{}");
  CHECK(ElemSet(5).min() == 5);
}

TEST_CASE("insert out of range throws") {
  ElemSet s(4);
  CHECK_THROWS_AS(s.insert(4), qset::PreconditionError);
}

TEST_CASE("set operations across word boundaries") {
  auto a = ElemSet::of(130, {0, 63, 64, 129});
  auto b = ElemSet::of(130, {63, 64, 100});
  CHECK((a & b) == ElemSet::of(130, {63, 64}));
  CHECK((a | b).size() == 5);
  CHECK((a - b) == ElemSet::of(130, {0, 129}));
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(ElemSet::full(130).size() == 130);
  CHECK(a.elements() == std::vector<qset::Element>{0, 63, 64, 129});
}

TEST_CASE("universe mismatch is rejected") {
  auto a = ElemSet::of(8, {1});
  auto b = ElemSet::of(9, {1});
  CHECK(a != b);
  CHECK_THROWS_AS(a |= b, qset::PreconditionError);
  CHECK_THROWS_AS((void)a.is_subset_of(b), qset::PreconditionError);
}

TEST_CASE("mask round trip and ordering") {
  auto s = ElemSet::from_mask(7, 0b1000011);
  CHECK(s == ElemSet::of(7, {0, 1, 6}));
  CHECK(s.to_mask() == 0b1000011);
  // Read as integers: {0,1,2} < {0,1,6} < {0,5,6}.
  CHECK(ElemSet::of(7, {0, 1, 2}) < s);
  CHECK(s < ElemSet::of(7, {0, 5, 6}));
  s.erase(6);
  CHECK(s == ElemSet::of(7, {0, 1}));
}
