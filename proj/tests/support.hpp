#ifndef QSET_TESTS_SUPPORT_HPP_
#define QSET_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <random>
#include <string>

#include "oracle/naive.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"
#include "qset/subgroup.hpp"

namespace testing {

inline qset::ElemSet set_of(qset::GroupTable const& g, std::initializer_list<qset::Element> xs) {
  return qset::ElemSet::of(g.order(), xs);
}

inline qset::Subgroup sub_of(qset::GroupTable const& g, std::initializer_list<qset::Element> xs) {
  return qset::Subgroup{set_of(g, xs)};
}

inline oracle::Set to_oracle(qset::ElemSet const& s) {
  oracle::Set out;
  s.for_each([&](qset::Element x) { out.insert(x); });
  return out;
}

// The group as the oracle sees it: only the table's products, nothing else.
inline oracle::Group table_view(qset::GroupTable const& g) {
  auto table = g.mul_table();
  auto const n = g.order();
  return {n, [table, n](unsigned x, unsigned y) { return static_cast<unsigned>(table[x * n + y]); }};
}

// Each element kept with probability `p`, at least one element.
inline qset::ElemSet random_set(std::size_t order, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  qset::ElemSet s(order);
  for (qset::Element x = 0; x < order; ++x)
    if (keep(rng)) s.insert(x);
  if (s.empty()) s.insert(static_cast<qset::Element>(std::uniform_int_distribution<std::size_t>(0, order - 1)(rng)));
  return s;
}

}  // namespace testing

#endif  // QSET_TESTS_SUPPORT_HPP_
