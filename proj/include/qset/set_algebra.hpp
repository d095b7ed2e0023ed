#ifndef QSET_SET_ALGEBRA_HPP_
#define QSET_SET_ALGEBRA_HPP_

#include <cstddef>
#include <vector>

#include "qset/check_report.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"
#include "qset/subgroup.hpp"

namespace qset {

// r(g) for every g. In quotient form r(g) = #{(a, b) ∈ A×B : a⁻¹b = g};
// in product form r(g) = #{(a, b) ∈ A×B : ab = g}.
struct RepCounts {
  std::vector<std::size_t> counts;

  std::size_t operator[](Element g) const { return counts[g]; }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

enum class RepForm { kQuotient, kProduct };

// gA and Ag.
ElemSet left_translate(GroupTable const& g, Element x, ElemSet const& a);
ElemSet right_translate(GroupTable const& g, ElemSet const& a, Element x);

ElemSet product_set(GroupTable const& g, ElemSet const& a, ElemSet const& b);
ElemSet inverse_set(GroupTable const& g, ElemSet const& a);

// A⁻¹A. Throws PreconditionError for empty A.
ElemSet quotient_set(GroupTable const& g, ElemSet const& a);

// Computed per g as |Ag ∩ B| (quotient) or |A⁻¹g ∩ B| (product).
// Throws PreconditionError if either set is empty.
RepCounts representation_counts(GroupTable const& g, ElemSet const& a, ElemSet const& b, RepForm form);

// {g : Ag = A}. A is a union of left cosets of the result.
Subgroup left_stabilizer(GroupTable const& g, ElemSet const& a);

// {g ∈ A⁻¹A : r(g) > |A⁻¹A| - |A|}.
ElemSet qplus(GroupTable const& g, ElemSet const& a);

// Box principle on A (r(g1) + r(g2) > |A| forces g1⁻¹g2 ∈ A⁻¹A) and the
// Kemperman-Wehn bound |AB| >= |A| + |B| - r(g) for every g ∈ AB.
CheckReport check_box_kw(GroupTable const& g, ElemSet const& a, ElemSet const& b);

}  // namespace qset

#endif  // QSET_SET_ALGEBRA_HPP_
