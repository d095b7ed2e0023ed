#include "qset/conjecture.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include <fmt/format.h>

#include "qset/errors.hpp"
#include "qset/mask_kernel.hpp"
#include "qset/set_algebra.hpp"

namespace qset {

ConjectureClauses evaluate_clauses(GroupTable const& g, ElemSet const& a, Subgroup const& h, ElemSet const& base,
                                   unsigned n) {
  if (a.empty() || base.empty()) throw PreconditionError("conjecture clauses need nonempty A and A0");
  ConjectureClauses c;
  auto const na = a.size();
  auto const nb = base.size();
  auto const nh = h.order();
  auto const norm = normalizer(g, h);
  auto const reps = base.elements();
  auto const base_h = product_set(g, base, h.elements);
  auto const q = quotient_set(g, a);

  c.small_base = nb <= n;
  c.one_normalizer_coset = std::all_of(reps.begin(), reps.end(), [&](Element x) {
    return std::all_of(reps.begin(), reps.end(), [&](Element y) { return norm.contains(g.mul(g.inv(x), y)); });
  });
  c.covered = a.is_subset_of(base_h);
  c.distinct_cosets = base_h.size() == nb * nh;
  c.dense = (2 * n + 1) * na > (n + 1) * (2 * nb - 1) * nh;
  c.quotient_shape = q == product_set(g, quotient_set(g, base), h.elements);
  c.quotient_size = q.size() == (2 * nb - 1) * nh;
  c.density_bracket = na <= base_h.size() && (2 * n + 1) * base_h.size() < (2 * n + 1) * na + n * nh;
  return c;
}

std::optional<ConjectureWitness> find_structure_witness(GroupTable const& g, ElemSet const& a, unsigned n,
                                                        std::vector<Subgroup> const& subgroups, WitnessMode mode) {
  if (a.empty()) return std::nullopt;
  auto const na = a.size();

  for (auto const& h : subgroups) {
    std::vector<std::vector<Element>> occupancy;
    ElemSet seen(g.order());
    bool too_many = false;
    a.for_each([&](Element x) {
      if (too_many || seen.contains(x)) return;
      auto const coset = left_coset(g, x, h);
      seen |= coset;
      occupancy.push_back((a & coset).elements());
      if (occupancy.size() > n) too_many = true;
    });
    if (too_many) continue;
    auto const m = occupancy.size();
    // Coset count alone fixes |A0|, so the density clause can be settled first.
    if ((2 * n + 1) * na <= (n + 1) * (2 * m - 1) * h.order()) continue;

    auto const norm = normalizer(g, h);
    std::vector<Element> chosen;
    std::optional<ConjectureWitness> found;
    auto search = [&](auto&& self, std::size_t depth) -> void {
      if (found) return;
      if (depth == m) {
        auto base = ElemSet::of(g.order(), chosen);
        auto clauses = evaluate_clauses(g, a, h, base, n);
        if (mode == WitnessMode::kFull ? clauses.all() : clauses.hypotheses())
          found = ConjectureWitness{h, std::move(base), n, clauses};
        return;
      }
      for (auto x : occupancy[depth]) {
        bool ok = true;
        for (auto y : chosen) {
          if (!norm.contains(g.mul(g.inv(y), x))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(x);
        self(self, depth + 1);
        chosen.pop_back();
        if (found) return;
      }
    };
    search(search, 0);
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

struct ScanPart {
  std::uint64_t classes = 0;
  std::uint64_t in_range = 0;
  std::uint64_t witnessed = 0;
  std::uint64_t sharpness_examined = 0;
  std::vector<std::uint64_t> counterexamples;
  std::vector<std::uint64_t> sharpness_violations;
};

}  // namespace

ConjectureReport conjecture_scan(GroupTable const& g, unsigned n, CensusOptions const& opts) {
  if (n == 0) throw PreconditionError("conjecture_scan needs n >= 1");
  check_census_cap(g, opts);
  auto const start = std::chrono::steady_clock::now();
  auto const order = static_cast<unsigned>(g.order());
  auto const subgroups = all_subgroups(g, std::max<std::size_t>(kDefaultSubgroupCap, g.order()));
  MaskKernel const kernel(g);
  std::vector<ScanPart> parts(partition_count(order, opts.jobs));

  for_each_canonical(kernel, std::max(1U, opts.sizes.lo), std::min(order, opts.sizes.hi), opts.jobs,
                     [&](std::size_t part, CanonicalSubset const& s) {
                       auto& st = parts[part];
                       ++st.classes;
                       auto const q = static_cast<std::size_t>(std::popcount(s.quotient));
                       auto const k = static_cast<std::size_t>(s.size);
                       if ((n + 1) * q < (2 * n + 1) * k) {
                         ++st.in_range;
                         auto const set = ElemSet::from_mask(order, s.mask);
                         if (find_structure_witness(g, set, n, subgroups, WitnessMode::kFull)) {
                           ++st.witnessed;
                         } else {
                           st.counterexamples.push_back(s.mask);
                         }
                       } else if (q < 2 * k) {
                         ++st.sharpness_examined;
                         auto const set = ElemSet::from_mask(order, s.mask);
                         if (find_structure_witness(g, set, n, subgroups, WitnessMode::kHypotheses))
                           st.sharpness_violations.push_back(s.mask);
                       }
                     });

  ConjectureReport rep;
  rep.group_spec = g.spec();
  rep.order = order;
  rep.n = n;
  std::vector<std::uint64_t> counter, sharp;
  for (auto const& p : parts) {
    rep.canonical_classes += p.classes;
    rep.in_range += p.in_range;
    rep.witnessed += p.witnessed;
    rep.sharpness_examined += p.sharpness_examined;
    counter.insert(counter.end(), p.counterexamples.begin(), p.counterexamples.end());
    sharp.insert(sharp.end(), p.sharpness_violations.begin(), p.sharpness_violations.end());
  }
  std::sort(counter.begin(), counter.end());
  std::sort(sharp.begin(), sharp.end());
  for (auto m : counter) rep.counterexamples.push_back(ElemSet::from_mask(order, m).to_string());
  for (auto m : sharp) rep.sharpness_violations.push_back(ElemSet::from_mask(order, m).to_string());
  rep.fatal = n <= 2 && !rep.counterexamples.empty();
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qset
