#ifndef QSET_CENSUS_HPP_
#define QSET_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"

namespace qset {

inline constexpr std::size_t kDefaultCensusCap = 24;
inline constexpr std::size_t kBigCensusCap = 32;

// Minimal bitmask among the left translates a⁻¹A, a ∈ A. Always contains
// the identity and has the same quotient set as A.
ElemSet canonical_form(GroupTable const& g, ElemSet const& a);

struct SizeRange {
  unsigned lo = 1;
  unsigned hi = 64;  // clipped to |G|
};

struct CensusOptions {
  SizeRange sizes;
  std::size_t jobs = 1;
  std::size_t cap = kDefaultCensusCap;
  bool allow_big = false;  // lifts the cap to kBigCensusCap
};

// Throws CapExceeded unless |G| fits the census cap in `opts`.
void check_census_cap(GroupTable const& g, CensusOptions const& opts);

struct CensusViolation {
  std::string set;   // set literal of the canonical representative
  std::string kind;  // necessity | moreover | sufficiency
  std::string detail;
};

struct SizeRow {
  unsigned size = 0;
  std::uint64_t subsets = 0;  // all subsets of this size (sum of orbit sizes)
  std::uint64_t classes = 0;  // canonical representatives
  std::size_t min_quotient = 0;
  std::string extremal_set;          // least canonical mask reaching min_quotient
  std::uint64_t extremal_classes = 0;
  std::uint64_t small_classes = 0;  // 3|Q| < 5|A|
};

struct CensusReport {
  std::string group_spec;
  std::size_t order = 0;
  SizeRange sizes;
  std::uint64_t subsets_scanned = 0;
  std::uint64_t canonical_classes = 0;
  std::uint64_t cond_i = 0;   // classes classified CondI
  std::uint64_t cond_ii = 0;  // classes classified CondII
  std::vector<SizeRow> by_size;
  std::vector<CensusViolation> violations;
  bool enumeration_complete = true;  // orbit sums match the binomial counts
  double runtime_seconds = 0;

  bool verified() const { return violations.empty() && enumeration_complete; }
};

// Exhaustive check over canonical subsets A with |A| in opts.sizes:
//   necessity    3|Q| < 5|A| but classify finds no witness
//   moreover     verify_structure or check_sufficiency fails on the witness
//   sufficiency  3|Q| >= 5|A| although A meets the hypotheses of (i) or (ii)
// The report (runtime aside) does not depend on opts.jobs.
CensusReport theorem_census(GroupTable const& g, CensusOptions const& opts);

}  // namespace qset

#endif  // QSET_CENSUS_HPP_
