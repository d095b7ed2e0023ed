#include "qset/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <map>
#include <tuple>

#include <fmt/format.h>

#include "qset/classifier.hpp"
#include "qset/errors.hpp"
#include "qset/mask_kernel.hpp"
#include "qset/set_algebra.hpp"
#include "qset/subgroup.hpp"

namespace qset {

ElemSet canonical_form(GroupTable const& g, ElemSet const& a) {
  if (a.empty()) throw PreconditionError("canonical_form needs a nonempty set");
  ElemSet best;
  bool first = true;
  a.for_each([&](Element x) {
    auto t = left_translate(g, g.inv(x), a);
    if (first || t < best) best = std::move(t);
    first = false;
  });
  return best;
}

void check_census_cap(GroupTable const& g, CensusOptions const& opts) {
  auto const cap = opts.allow_big ? std::max(opts.cap, kBigCensusCap) : opts.cap;
  if (g.order() > cap) {
    throw CapExceeded(fmt::format("{} has order {}; exhaustive scans are capped at {}{}", g.spec(), g.order(), cap,
                                  opts.allow_big ? "" : " (orders up to 32 need --i-know-this-is-big)"));
  }
  if (g.order() > 64) throw CapExceeded("exhaustive scans need a group of order at most 64");
}

namespace {

struct MaskedSubgroup {
  std::uint64_t elements = 0;
  std::size_t order = 0;
  std::uint64_t normalizer = 0;
  std::vector<std::uint64_t> left_cosets;  // xH for each x
};

std::vector<MaskedSubgroup> mask_subgroups(GroupTable const& g, std::vector<Subgroup> const& subgroups) {
  std::vector<MaskedSubgroup> out;
  out.reserve(subgroups.size());
  for (auto const& h : subgroups) {
    MaskedSubgroup m;
    m.elements = h.elements.to_mask();
    m.order = h.order();
    m.normalizer = normalizer(g, h).elements.to_mask();
    for (Element x = 0; x < g.order(); ++x) m.left_cosets.push_back(left_coset(g, x, h).to_mask());
    out.push_back(std::move(m));
  }
  return out;
}

// Whether canonical A (so 0 ∈ A and the coset of A through 0 is H itself)
// meets the hypotheses of condition (i) or (ii) for some subgroup.
std::string hypothesis_witness(GroupTable const& g, std::vector<MaskedSubgroup> const& subs, std::uint64_t a,
                               std::size_t size) {
  for (auto const& h : subs) {
    if (5 * size > 3 * h.order && (a & ~h.elements) == 0)
      return fmt::format("(i) holds for H={}", ElemSet::from_mask(g.order(), h.elements).to_string());
  }
  for (auto const& h : subs) {
    if (5 * size <= 9 * h.order) continue;
    auto const rest = a & ~h.elements;
    if (rest == 0) continue;
    auto const b = static_cast<Element>(std::countr_zero(rest));
    if ((rest & ~h.left_cosets[b]) != 0) continue;
    bool const normal = (h.normalizer >> b) & 1U;
    bool const square_in = (h.elements >> g.mul(b, b)) & 1U;
    if (normal && !square_in)
      return fmt::format("(ii) holds for H={} a=0 b={}", ElemSet::from_mask(g.order(), h.elements).to_string(), b);
  }
  return {};
}

struct SizeAcc {
  std::uint64_t subsets = 0;
  std::uint64_t classes = 0;
  std::size_t min_quotient = std::numeric_limits<std::size_t>::max();
  std::uint64_t extremal_mask = 0;
  std::uint64_t extremal_classes = 0;
  std::uint64_t small = 0;

  void add(std::uint64_t mask, std::size_t q, std::uint64_t orbit, bool is_small) {
    subsets += orbit;
    ++classes;
    small += is_small ? 1 : 0;
    if (q < min_quotient) {
      min_quotient = q;
      extremal_mask = mask;
      extremal_classes = 1;
    } else if (q == min_quotient) {
      extremal_mask = std::min(extremal_mask, mask);
      ++extremal_classes;
    }
  }
  void merge(SizeAcc const& o) {
    subsets += o.subsets;
    classes += o.classes;
    small += o.small;
    if (o.classes == 0) return;
    if (o.min_quotient < min_quotient) {
      min_quotient = o.min_quotient;
      extremal_mask = o.extremal_mask;
      extremal_classes = o.extremal_classes;
    } else if (o.min_quotient == min_quotient) {
      extremal_mask = std::min(extremal_mask, o.extremal_mask);
      extremal_classes += o.extremal_classes;
    }
  }
};

struct PartState {
  std::vector<SizeAcc> sizes;
  std::uint64_t cond_i = 0;
  std::uint64_t cond_ii = 0;
  std::vector<std::pair<std::uint64_t, CensusViolation>> violations;
};

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

// For a necessity violation: the two-coset cover that fails condition (ii),
// when there is one. Names the normalizer and square tests that broke and
// whether the two cross double cosets coincide.
std::string diagnose_two_cosets(GroupTable const& g, std::vector<MaskedSubgroup> const& subs, std::uint64_t a,
                                std::size_t size) {
  for (auto const& h : subs) {
    if (5 * size <= 9 * h.order) continue;
    auto const rest = a & ~h.elements;
    if (rest == 0) continue;
    auto const b = static_cast<Element>(std::countr_zero(rest));
    if ((rest & ~h.left_cosets[b]) != 0) continue;
    auto const hs = ElemSet::from_mask(g.order(), h.elements);
    Subgroup const sub{hs};
    auto const fwd = double_coset(g, sub, b);
    bool const normal = (h.normalizer >> b) & 1U;
    return fmt::format("A inside H u bH with H={} b={}: b {} N(H), b^2 {} H, |HbH|={}, HbH {} Hb^-1H", hs.to_string(),
                       b, normal ? "in" : "not in", ((h.elements >> g.mul(b, b)) & 1U) ? "in" : "not in",
                       fwd.size(), fwd == double_coset(g, sub, g.inv(b)) ? "=" : "!=");
  }
  return {};
}

std::string report_failures(CheckReport const& rep) {
  std::string out;
  for (auto const& f : rep.failures()) {
    if (!out.empty()) out += "; ";
    out += f.name + ": " + f.detail;
  }
  return out;
}

}  // namespace

CensusReport theorem_census(GroupTable const& g, CensusOptions const& opts) {
  check_census_cap(g, opts);
  auto const start = std::chrono::steady_clock::now();
  auto const n = static_cast<unsigned>(g.order());
  auto const lo = std::max(1U, opts.sizes.lo);
  auto const hi = std::min(n, opts.sizes.hi);

  auto const subgroups = all_subgroups(g, std::max<std::size_t>(kDefaultSubgroupCap, g.order()));
  auto const masked = mask_subgroups(g, subgroups);
  MaskKernel const kernel(g);

  std::vector<PartState> parts(partition_count(n, opts.jobs));
  for (auto& p : parts) p.sizes.resize(n + 1);

  for_each_canonical(kernel, lo, hi, opts.jobs, [&](std::size_t part, CanonicalSubset const& s) {
    auto& st = parts[part];
    auto const q = static_cast<std::size_t>(std::popcount(s.quotient));
    bool const small = 3 * q < 5 * s.size;
    st.sizes[s.size].add(s.mask, q, s.orbit_size, small);
    auto record = [&](std::string kind, std::string detail) {
      st.violations.push_back({s.mask, {ElemSet::from_mask(n, s.mask).to_string(), std::move(kind), std::move(detail)}});
    };

    if (!small) {
      if (auto w = hypothesis_witness(g, masked, s.mask, s.size); !w.empty())
        record("sufficiency", fmt::format("3|Q|={} >= 5|A|={} but {}", 3 * q, 5 * s.size, w));
      return;
    }
    auto const set = ElemSet::from_mask(n, s.mask);
    auto const c = classify(g, set, subgroups);
    if (c.kind == Kind::kNoWitness) {
      auto detail = fmt::format("|Q|={} |A|={} and no (i)/(ii) witness", q, s.size);
      if (auto d = diagnose_two_cosets(g, masked, s.mask, s.size); !d.empty()) detail += "; " + d;
      record("necessity", std::move(detail));
      return;
    }
    auto const structure = verify_structure(g, set, c);
    if (!structure.ok()) record("moreover", report_failures(structure));
    if (c.kind == Kind::kCondI) {
      ++st.cond_i;
    } else {
      ++st.cond_ii;
      auto const suff = check_sufficiency(g, *c.subgroup, c.a, c.b, set);
      if (!suff.ok()) record("moreover", report_failures(suff));
    }
  });

  CensusReport rep;
  rep.group_spec = g.spec();
  rep.order = n;
  rep.sizes = {lo, hi};
  std::vector<SizeAcc> total(n + 1);
  std::vector<std::pair<std::uint64_t, CensusViolation>> violations;
  for (auto& p : parts) {
    for (unsigned k = 0; k <= n; ++k) total[k].merge(p.sizes[k]);
    rep.cond_i += p.cond_i;
    rep.cond_ii += p.cond_ii;
    for (auto& v : p.violations) violations.push_back(std::move(v));
  }
  std::sort(violations.begin(), violations.end(), [](auto const& x, auto const& y) {
    return std::tie(x.first, x.second.kind, x.second.detail) < std::tie(y.first, y.second.kind, y.second.detail);
  });
  for (auto& v : violations) rep.violations.push_back(std::move(v.second));

  for (unsigned k = lo; k <= hi; ++k) {
    auto const& acc = total[k];
    SizeRow row;
    row.size = k;
    row.subsets = acc.subsets;
    row.classes = acc.classes;
    row.small_classes = acc.small;
    if (acc.classes > 0) {
      row.min_quotient = acc.min_quotient;
      row.extremal_set = ElemSet::from_mask(n, acc.extremal_mask).to_string();
      row.extremal_classes = acc.extremal_classes;
    }
    rep.subsets_scanned += acc.subsets;
    rep.canonical_classes += acc.classes;
    if (acc.subsets != binomial(n, k)) rep.enumeration_complete = false;
    rep.by_size.push_back(std::move(row));
  }
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qset
