#ifndef QSET_GROUP_TABLE_HPP_
#define QSET_GROUP_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qset/check_report.hpp"
#include "qset/elem_set.hpp"

namespace qset {

inline constexpr std::size_t kDefaultOrderCap = 5040;

// Immutable Cayley table of a finite group.
//
// mul(x, y) is "x then y": for permutation groups the product maps a point i
// to y(x(i)). Element 0 is the identity. Tables are built once and shared
// read-only between threads.
class GroupTable {
 public:
  static constexpr Element kIdentity = 0;

  // Wraps a raw row-major table without validating it; inverses are found by
  // scanning each row for the identity (0 if none). Use verify_group_axioms
  // before trusting a hand-made table.
  static GroupTable from_table(std::string spec, std::size_t order, std::vector<Element> const& mul,
                               std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Element mul(Element x, Element y) const noexcept { return mul_[x * order_ + y]; }
  Element inv(Element x) const noexcept { return inv_[x]; }
  std::string const& name(Element x) const { return names_[x]; }
  std::string const& spec() const noexcept { return spec_; }

  // Row-major copy of the table, mul(x, y) at x * order() + y.
  std::vector<Element> mul_table() const;

  friend bool operator==(GroupTable const&, GroupTable const&) = default;

 private:
  GroupTable() = default;
  friend class GroupBuilder;

  std::size_t order_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::string> names_;
  std::string spec_;
};

// Builds a group from a single spec line:
//
//   cyclic n            Z/n, id = residue
//   dihedral n          order 2n; ids 0..n-1 are r^i, ids n..2n-1 are r^i s
//   dicyclic m          order 4m (m >= 2); ids 0..2m-1 are a^i, 2m..4m-1 are a^i x
//   symmetric k         k <= 5; closure of (2 1 3 .. k) and (2 3 .. k 1)
//   perm degree=d gens=[(i1 i2 ..),(..)]   one-line images of 1..d
//   product S ; S ; ..  direct product, id of (g, h) is g * |H| + h
//
// Permutation groups label elements by breadth-first closure from the
// identity, trying generators in the listed order. Throws SpecError on bad
// syntax (positions reported against `line`) and CapExceeded when the group
// would exceed `order_cap`. Text after '#' is ignored.
GroupTable build_group(std::string_view spec, std::size_t order_cap = kDefaultOrderCap, std::size_t line = 1);

// Identity, inverses, associativity and Latin-square checks; the first
// offending element (pair, triple) is kept as the failure witness.
CheckReport verify_group_axioms(GroupTable const& g);

}  // namespace qset

#endif  // QSET_GROUP_TABLE_HPP_
