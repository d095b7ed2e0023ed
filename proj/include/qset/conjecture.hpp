#ifndef QSET_CONJECTURE_HPP_
#define QSET_CONJECTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qset/census.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"
#include "qset/subgroup.hpp"

namespace qset {

// Clause results for a candidate (H, A0) against the n-coset structure
// expected when (n+1)|A⁻¹A| < (2n+1)|A|.
struct ConjectureClauses {
  bool small_base = false;        // |A0| <= n
  bool one_normalizer_coset = false;  // A0 inside a single left N(H)-coset
  bool covered = false;           // A ⊆ A0H
  bool distinct_cosets = false;   // |A0H| = |A0||H|
  bool dense = false;             // (2n+1)|A| > (n+1)(2|A0|-1)|H|
  bool quotient_shape = false;    // A⁻¹A = A0⁻¹A0H
  bool quotient_size = false;     // |A⁻¹A| = (2|A0|-1)|H|
  bool density_bracket = false;   // |A| <= |A0H| and (2n+1)|A0H| < (2n+1)|A| + n|H|

  bool hypotheses() const { return small_base && one_normalizer_coset && covered && distinct_cosets && dense; }
  bool all() const { return hypotheses() && quotient_shape && quotient_size && density_bracket; }
};

struct ConjectureWitness {
  Subgroup h;
  ElemSet base;  // A0
  unsigned n = 0;
  ConjectureClauses clauses;

  bool valid() const { return clauses.all(); }
};

ConjectureClauses evaluate_clauses(GroupTable const& g, ElemSet const& a, Subgroup const& h, ElemSet const& base,
                                   unsigned n);

enum class WitnessMode {
  kFull,        // every clause
  kHypotheses,  // only the clauses a witness is assumed to satisfy
};

// Searches subgroups in the given order; for each H meeting at most n left
// cosets, tries one representative per coset (coset order by least member,
// representatives in increasing id order), pruning as soon as two chosen
// representatives lie in different left N(H)-cosets. Returns the first
// candidate whose clauses pass, or nothing.
std::optional<ConjectureWitness> find_structure_witness(GroupTable const& g, ElemSet const& a, unsigned n,
                                                        std::vector<Subgroup> const& subgroups,
                                                        WitnessMode mode = WitnessMode::kFull);

struct ConjectureReport {
  std::string group_spec;
  std::size_t order = 0;
  unsigned n = 0;
  std::uint64_t canonical_classes = 0;
  std::uint64_t in_range = 0;    // classes with (n+1)|Q| < (2n+1)|A|
  std::uint64_t witnessed = 0;
  std::vector<std::string> counterexamples;  // canonical set literals
  bool fatal = false;  // counterexamples for n <= 2 contradict known results
  std::uint64_t sharpness_examined = 0;  // outside the threshold but |Q| < 2|A|
  std::vector<std::string> sharpness_violations;
  double runtime_seconds = 0;

  bool clean() const { return counterexamples.empty() && sharpness_violations.empty(); }
};

// Scans every canonical subset. Sets below the (2 - 1/(n+1)) threshold need
// a full witness; sets with |Q| < 2|A| that admit a hypotheses-only witness
// must also be below the threshold.
ConjectureReport conjecture_scan(GroupTable const& g, unsigned n, CensusOptions const& opts);

}  // namespace qset

#endif  // QSET_CONJECTURE_HPP_
