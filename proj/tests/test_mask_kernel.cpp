#include <doctest.h>

#include <bit>
#include <map>
#include <mutex>
#include <set>

#include "qset/census.hpp"
#include "qset/mask_kernel.hpp"
#include "qset/set_algebra.hpp"
#include "support.hpp"

using namespace qset;

TEST_CASE("masked left translation matches the table") {
  for (auto spec : {"dihedral 5", "cyclic 24", "symmetric 4", "product cyclic 2 ; cyclic 2 ; cyclic 2"}) {
    auto g = build_group(spec);
    MaskKernel k(g);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      auto a = testing::random_set(g.order(), 0.4, rng);
      for (Element x = 0; x < g.order(); ++x) CHECK(k.left(x, a.to_mask()) == left_translate(g, x, a).to_mask());
    }
  }
}

TEST_CASE("partition counts") {
  CHECK(partition_count(12, 1) == 1);
  CHECK(partition_count(12, 3) == 4);
  CHECK(partition_count(12, 4) == 4);
  CHECK(partition_count(12, 5) == 8);
  CHECK(partition_count(3, 64) <= 4);
}

TEST_CASE("every class is visited once, with the right orbit size and quotient") {
  auto g = build_group("dihedral 5");
  MaskKernel k(g);
  for (std::size_t jobs : {1U, 3U, 8U}) {
    std::mutex mu;
    std::set<std::uint64_t> seen;
    std::uint64_t total = 0;
    for_each_canonical(k, 1, 10, jobs, [&](std::size_t, CanonicalSubset const& s) {
      auto a = ElemSet::from_mask(10, s.mask);
      std::lock_guard lock(mu);
      CHECK(seen.insert(s.mask).second);
      CHECK(canonical_form(g, a) == a);
      CHECK(s.quotient == quotient_set(g, a).to_mask());
      CHECK(s.size == a.size());
      std::set<std::uint64_t> orbit;
      for (Element x = 0; x < 10; ++x) orbit.insert(left_translate(g, x, a).to_mask());
      CHECK(s.orbit_size == orbit.size());
      total += s.orbit_size;
    });
    CHECK(total == 1023);
  }
}

TEST_CASE("size window") {
  auto g = build_group("cyclic 10");
  MaskKernel k(g);
  std::uint64_t count = 0;
  for_each_canonical(k, 3, 3, 2, [&](std::size_t, CanonicalSubset const& s) {
    CHECK(s.size == 3);
    count += s.orbit_size;
  });
  CHECK(count == 120);
}

TEST_CASE("exceptions from the visitor propagate") {
  auto g = build_group("cyclic 10");
  MaskKernel k(g);
  CHECK_THROWS_AS(for_each_canonical(k, 1, 10, 4,
                                     [](std::size_t, CanonicalSubset const& s) {
                                       if (s.size == 5) throw std::runtime_error("stop");
                                     }),
                  std::runtime_error);
}
