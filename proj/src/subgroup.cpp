#include "qset/subgroup.hpp"

#include <set>

#include <fmt/format.h>

#include "qset/errors.hpp"
#include "qset/set_algebra.hpp"

namespace qset {

bool is_subgroup(GroupTable const& g, ElemSet const& s) {
  if (s.universe() != g.order() || !s.contains(GroupTable::kIdentity)) return false;
  auto const elems = s.elements();
  for (auto x : elems) {
    if (!s.contains(g.inv(x))) return false;
    for (auto y : elems)
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

void require_subgroup(GroupTable const& g, Subgroup const& h) {
  if (!is_subgroup(g, h.elements))
    throw PreconditionError(fmt::format("{} is not a subgroup of {}", h.elements.to_string(), g.spec()));
}

namespace {

// Closure of `seed` (which must contain the identity) under right
// multiplication by `gens`.
ElemSet close_under(GroupTable const& g, ElemSet seed, std::vector<Element> const& gens) {
  auto queue = seed.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto t : gens) {
      auto y = g.mul(queue[head], t);
      if (!seed.contains(y)) {
        seed.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seed;
}

}  // namespace

Subgroup generated_subgroup(GroupTable const& g, ElemSet const& s) {
  if (s.universe() != g.order()) throw PreconditionError("generating set belongs to a different group");
  ElemSet seed(g.order());
  seed.insert(GroupTable::kIdentity);
  return {close_under(g, std::move(seed), s.elements())};
}

std::vector<Subgroup> all_subgroups(GroupTable const& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded(fmt::format("subgroup enumeration is capped at order {}; {} has order {}", cap, g.spec(),
                                  g.order()));
  auto const n = static_cast<Element>(g.order());

  // One generator per distinct cyclic subgroup.
  std::set<Subgroup> found;
  std::vector<std::pair<Element, ElemSet>> cyclic;
  for (Element x = 0; x < n; ++x) {
    auto c = generated_subgroup(g, ElemSet::of(n, {x}));
    if (found.insert(c).second) cyclic.emplace_back(x, c.elements);
  }

  std::vector<Subgroup> work(found.begin(), found.end());
  while (!work.empty()) {
    auto h = std::move(work.back());
    work.pop_back();
    auto gens = h.elements.elements();
    for (auto const& [x, c] : cyclic) {
      if (c.is_subset_of(h.elements)) continue;
      gens.push_back(x);
      Subgroup joined{close_under(g, h.elements, gens)};
      gens.pop_back();
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

ElemSet left_coset(GroupTable const& g, Element x, Subgroup const& h) { return left_translate(g, x, h.elements); }

ElemSet right_coset(GroupTable const& g, Subgroup const& h, Element x) {
  return right_translate(g, h.elements, x);
}

ElemSet double_coset(GroupTable const& g, Subgroup const& h, Element x) {
  auto const xh = left_coset(g, x, h);
  ElemSet out(g.order());
  h.elements.for_each([&](Element k) { out |= left_translate(g, k, xh); });
  return out;
}

Subgroup normalizer(GroupTable const& g, Subgroup const& h) {
  require_subgroup(g, h);
  ElemSet out(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (left_coset(g, x, h) == right_coset(g, h, x)) out.insert(x);
  return {out};
}

CosetPartition coset_partition(GroupTable const& g, Subgroup const& h, CosetSide side) {
  require_subgroup(g, h);
  CosetPartition part;
  part.side = side;
  ElemSet covered(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    ElemSet block = side == CosetSide::kLeft    ? left_coset(g, x, h)
                    : side == CosetSide::kRight ? right_coset(g, h, x)
                                                : double_coset(g, h, x);
    covered |= block;
    part.blocks.push_back(std::move(block));
  }
  return part;
}

CheckReport check_coset_lemmas(GroupTable const& g, Subgroup const& h) {
  require_subgroup(g, h);
  CheckReport rep;
  rep.subject = fmt::format("{} H={}", g.spec(), h.elements.to_string());
  auto const n = static_cast<Element>(g.order());
  auto const hsize = h.order();
  auto const norm = normalizer(g, h);

  {
    std::string witness;
    auto part = coset_partition(g, h, CosetSide::kDouble);
    ElemSet seen(n);
    for (auto const& block : part.blocks) {
      if (block.intersects(seen)) witness = fmt::format("block {} overlaps an earlier block", block.to_string());
      seen |= block;
      if (witness.empty() && (product_set(g, h.elements, block) != block || product_set(g, block, h.elements) != block))
        witness = fmt::format("block {} is not stable under H", block.to_string());
      if (!witness.empty()) break;
    }
    if (witness.empty() && seen != ElemSet::full(n)) witness = "double cosets do not cover G";
    rep.expect(witness.empty(), "double_cosets", witness);
  }

  std::vector<ElemSet> lc, rc;
  lc.reserve(n);
  rc.reserve(n);
  for (Element x = 0; x < n; ++x) {
    lc.push_back(left_coset(g, x, h));
    rc.push_back(right_coset(g, h, x));
  }

  std::string l2, l3;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      bool const equal = lc[a] == rc[b];
      if (l2.empty() && !equal && 2 * lc[a].intersection_size(rc[b]) > hsize)
        l2 = fmt::format("a={} b={} |aH∩Hb|={}", a, b, lc[a].intersection_size(rc[b]));
      bool const rhs = norm.contains(a) && norm.contains(b) && lc[a] == lc[b];
      if (l3.empty() && equal != rhs) l3 = fmt::format("a={} b={} aH=Hb:{} rhs:{}", a, b, equal, rhs);
    }
  }
  rep.expect(l2.empty(), "left_right", l2);
  rep.expect(l3.empty(), "left_right_eq", l3);

  std::string l4, l5;
  for (Element x = 0; x < n; ++x) {
    // The converse direction needs g ∈ N(H): in S3 with H = <(1 2)> and
    // g = (1 3), g² = 1 but H ∪ gH has four elements.
    if (l4.empty() && !h.contains(x)) {
      bool const sub = is_subgroup(g, h.elements | lc[x]);
      bool const sq = h.contains(g.mul(x, x));
      if (sub && !sq) l4 = fmt::format("g={} H∪gH is a subgroup but g²∉H", x);
      if (norm.contains(x) && sq && !sub) l4 = fmt::format("g={} ∈ N(H), g²∈H but H∪gH is not a subgroup", x);
    }
    if (l5.empty()) {
      bool const small = double_coset(g, h, x).size() == hsize;
      if (small != norm.contains(x)) l5 = fmt::format("g={} |HgH|=|H|:{} g∈N(H):{}", x, small, norm.contains(x));
    }
  }
  rep.expect(l4.empty(), "index_two", l4);
  rep.expect(l5.empty(), "small_double", l5);
  return rep;
}

}  // namespace qset
