#include "qset/catalog.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

namespace qset {

namespace {

constexpr char const* kAlternating4 = "perm degree=4 gens=[(2 3 1 4),(1 3 4 2)]";

// (order, spec) for everything outside the parametrised families.
std::vector<std::pair<std::size_t, std::string>> const& fixed_entries() {
  static std::vector<std::pair<std::size_t, std::string>> const entries = {
      {4, "product cyclic 2 ; cyclic 2"},
      {8, "product cyclic 2 ; cyclic 4"},
      {8, "product cyclic 2 ; cyclic 2 ; cyclic 2"},
      {9, "product cyclic 3 ; cyclic 3"},
      {12, "product cyclic 2 ; cyclic 6"},
      {12, "product symmetric 3 ; cyclic 2"},
      {12, kAlternating4},
      {16, "product cyclic 2 ; cyclic 8"},
      {16, "product cyclic 4 ; cyclic 4"},
      {16, "product cyclic 2 ; cyclic 2 ; cyclic 4"},
      {16, "product cyclic 2 ; cyclic 2 ; cyclic 2 ; cyclic 2"},
      {16, "product dihedral 4 ; cyclic 2"},
      {16, "product dicyclic 2 ; cyclic 2"},
      {18, "product cyclic 3 ; cyclic 6"},
      {18, "product symmetric 3 ; cyclic 3"},
      {20, "product cyclic 2 ; cyclic 10"},
      {24, "product cyclic 2 ; cyclic 12"},
      {24, "product cyclic 2 ; cyclic 2 ; cyclic 6"},
      {24, "product symmetric 3 ; cyclic 4"},
      {24, "product symmetric 3 ; cyclic 2 ; cyclic 2"},
      {24, "product dihedral 4 ; cyclic 3"},
      {24, "product dicyclic 2 ; cyclic 3"},
      {24, std::string("product ") + kAlternating4 + " ; cyclic 2"},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_specs(std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::string>> all;
  for (std::size_t n = 1; n <= max_order; ++n) all.emplace_back(n, fmt::format("cyclic {}", n));
  for (std::size_t n = 1; 2 * n <= max_order; ++n) all.emplace_back(2 * n, fmt::format("dihedral {}", n));
  for (std::size_t m = 2; 4 * m <= max_order; ++m) all.emplace_back(4 * m, fmt::format("dicyclic {}", m));
  std::size_t fact = 1;
  for (std::size_t k = 1; k <= 5; ++k) {
    fact *= k;
    if (fact <= max_order) all.emplace_back(fact, fmt::format("symmetric {}", k));
  }
  for (auto const& e : fixed_entries())
    if (e.first <= max_order) all.push_back(e);
  std::sort(all.begin(), all.end());
  std::vector<std::string> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

}  // namespace qset
