#ifndef QSET_SUBGROUP_HPP_
#define QSET_SUBGROUP_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "qset/check_report.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"

namespace qset {

inline constexpr std::size_t kDefaultSubgroupCap = 64;

struct Subgroup {
  ElemSet elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const { return elements.contains(x); }

  friend bool operator==(Subgroup const&, Subgroup const&) = default;
  // (order, bitmask), the order used by all_subgroups.
  friend std::strong_ordering operator<=>(Subgroup const& a, Subgroup const& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.elements <=> b.elements;
  }
};

enum class CosetSide { kLeft, kRight, kDouble };

struct CosetPartition {
  CosetSide side = CosetSide::kLeft;
  std::vector<ElemSet> blocks;  // sorted by minimal member
};

// True when `s` contains the identity and is closed under products and inverses.
bool is_subgroup(GroupTable const& g, ElemSet const& s);

// Throws PreconditionError unless h.elements is a subgroup of g.
void require_subgroup(GroupTable const& g, Subgroup const& h);

// Smallest subgroup containing `s`; the trivial subgroup for empty `s`.
Subgroup generated_subgroup(GroupTable const& g, ElemSet const& s);

// Every subgroup of g, sorted by (order, bitmask). Built from the cyclic
// subgroups by repeatedly joining with a cyclic subgroup until nothing new
// appears. Throws CapExceeded when |G| > cap.
std::vector<Subgroup> all_subgroups(GroupTable const& g, std::size_t cap = kDefaultSubgroupCap);

// {x : xH = Hx}.
Subgroup normalizer(GroupTable const& g, Subgroup const& h);

ElemSet left_coset(GroupTable const& g, Element x, Subgroup const& h);
ElemSet right_coset(GroupTable const& g, Subgroup const& h, Element x);
ElemSet double_coset(GroupTable const& g, Subgroup const& h, Element x);

CosetPartition coset_partition(GroupTable const& g, Subgroup const& h, CosetSide side);

// Exhaustive check of the elementary coset facts for one subgroup:
//   double_cosets  double cosets partition G and each is stable under H on both sides
//   left_right     aH = Hb, or |aH ∩ Hb| <= |H|/2              (all a, b)
//   left_right_eq  aH = Hb  <=>  a, b ∈ N(H) and aH = bH        (all a, b)
//   index_two      H ∪ gH is a subgroup  =>  g² ∈ H             (all g ∉ H)
//                  and the converse                            (all g ∈ N(H) outside H)
//   small_double   |HgH| = |H|  <=>  g ∈ N(H)                   (all g)
// Any failure is an implementation defect; the witness names the elements.
CheckReport check_coset_lemmas(GroupTable const& g, Subgroup const& h);

}  // namespace qset

#endif  // QSET_SUBGROUP_HPP_
