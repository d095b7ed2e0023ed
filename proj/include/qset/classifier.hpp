#ifndef QSET_CLASSIFIER_HPP_
#define QSET_CLASSIFIER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "qset/check_report.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"
#include "qset/subgroup.hpp"

namespace qset {

// Outcome of testing |A⁻¹A| < 5/3 |A|.
//
//   kNotSmall          3|A⁻¹A| >= 5|A|
//   kCondI             A ⊆ aH and 5|A| > 3|H|
//   kCondII            A ⊆ aH ∪ bH, 5|A| > 9|H|, a⁻¹b ∈ N(H), (a⁻¹b)² ∉ H
//   kNoWitness         small quotient set but neither witness exists
enum class Kind { kNotSmall, kCondI, kCondII, kNoWitness };

char const* to_string(Kind k);

// Exact record of the 3|Q| vs 5|A| comparison.
struct RatioCheck {
  std::size_t quotient_size = 0;
  std::size_t set_size = 0;

  std::size_t lhs() const { return 3 * quotient_size; }
  std::size_t rhs() const { return 5 * set_size; }
  bool small() const { return lhs() < rhs(); }
};

struct Classification {
  Kind kind = Kind::kNotSmall;
  std::optional<Subgroup> subgroup;  // H, for kCondI and kCondII
  Element a = 0;                     // coset representative (kCondI, kCondII)
  Element b = 0;                     // second representative (kCondII)
  ElemSet quotient;
  RatioCheck ratio;
};

// Decides the 5/3 threshold for nonempty A and, below it, returns the
// condition (i) witness with the smallest H, else the condition (ii) witness
// with the smallest H. Representatives are the least element of A in each
// coset. `subgroups` must be all_subgroups(g).
Classification classify(GroupTable const& g, ElemSet const& a, std::vector<Subgroup> const& subgroups);

// Checks the quotient-set structure a witness promises: A⁻¹A = H for (i);
// A⁻¹A = H ⊔ H(a⁻¹b)H ⊔ H(b⁻¹a)H with both double cosets of size |H| for
// (ii). Throws PreconditionError for kNotSmall, kNoWitness, or a
// witness that does not fit A.
CheckReport verify_structure(GroupTable const& g, ElemSet const& a, Classification const& c);

// For A ⊆ aH ∪ bH with aH != bH, runs whichever of the two sufficiency
// arguments applies:
//   split_*   a⁻¹b ∈ N(H), (a⁻¹b)² ∉ H, 5|A| > 9|H|: 3|Q| < 5|A| and
//             Q = (X⁻¹X ∪ Y⁻¹Y) ∪ X⁻¹(a⁻¹b)Y ∪ Y⁻¹(b⁻¹a)X with
//             X = a⁻¹A ∩ H, Y = b⁻¹A ∩ H
//   pair_*    5|A| > 9|H| and |Q| <= 3|H|: a⁻¹b ∈ N(H), and A meets
//             condition (i) for F = H ∪ (a⁻¹b)H when (a⁻¹b)² ∈ H, condition
//             (ii) otherwise. pair_normalizes does fail when
//             H(a⁻¹b)H = H(b⁻¹a)H: the two cross parts then overlap and |Q|
//             can reach 3|H| without a⁻¹b normalizing H (H = <s>, b = r in
//             dihedral groups of order >= 8).
// Violated preconditions are reported as failed items.
CheckReport check_sufficiency(GroupTable const& g, Subgroup const& h, Element a, Element b, ElemSet const& set);

// g⁻¹H ∪ H ∪ Hg, which sits exactly at |A⁻¹A| = 5/3 |A|. Requires g ∈ N(H)
// and gⁱ ∉ H for i = 1..4; throws PreconditionError naming the failure.
ElemSet construct_threshold_example(GroupTable const& g, Subgroup const& h, Element x);

struct QplusDiagnostics {
  ElemSet quotient;  // Q
  ElemSet qplus;     // Q⁺
  Subgroup f;        // <Q⁺>
  ElemSet af;
  // qplus_q, q_qplus, f_q, q_f, af_quotient; then r_gap and r_full_iff_f,
  // which are skipped unless AF = A and 3|Q| < 5|A|.
  CheckReport checks;
  // Two-sided bound for g ∈ Q with r(g) < |A|, as signed integers.
  long long gap_lower = 0;  // 2|A| - |Q|
  long long gap_upper = 0;  // |Q| - |A|
  bool gap_holds = true;    // recorded in every case, asserted only in scope
};

QplusDiagnostics qplus_diagnostics(GroupTable const& g, ElemSet const& a);

}  // namespace qset

#endif  // QSET_CLASSIFIER_HPP_
