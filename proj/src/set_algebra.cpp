#include "qset/set_algebra.hpp"

#include <fmt/format.h>

#include "qset/errors.hpp"

namespace qset {

namespace {

void require_nonempty(ElemSet const& a, char const* what) {
  if (a.empty()) throw PreconditionError(fmt::format("{} needs a nonempty set", what));
}

void require_member(GroupTable const& g, ElemSet const& a) {
  if (a.universe() != g.order()) throw PreconditionError("set belongs to a group of different order");
}

}  // namespace

ElemSet left_translate(GroupTable const& g, Element x, ElemSet const& a) {
  require_member(g, a);
  ElemSet out(g.order());
  a.for_each([&](Element y) { out.insert(g.mul(x, y)); });
  return out;
}

ElemSet right_translate(GroupTable const& g, ElemSet const& a, Element x) {
  require_member(g, a);
  ElemSet out(g.order());
  a.for_each([&](Element y) { out.insert(g.mul(y, x)); });
  return out;
}

ElemSet product_set(GroupTable const& g, ElemSet const& a, ElemSet const& b) {
  require_member(g, a);
  require_member(g, b);
  ElemSet out(g.order());
  a.for_each([&](Element x) { out |= left_translate(g, x, b); });
  return out;
}

ElemSet inverse_set(GroupTable const& g, ElemSet const& a) {
  require_member(g, a);
  ElemSet out(g.order());
  a.for_each([&](Element x) { out.insert(g.inv(x)); });
  return out;
}

ElemSet quotient_set(GroupTable const& g, ElemSet const& a) {
  require_nonempty(a, "quotient_set");
  return product_set(g, inverse_set(g, a), a);
}

RepCounts representation_counts(GroupTable const& g, ElemSet const& a, ElemSet const& b, RepForm form) {
  require_nonempty(a, "representation_counts");
  require_nonempty(b, "representation_counts");
  require_member(g, b);
  // a⁻¹b = x  <=>  b = ax,  and  ab = x  <=>  b = a⁻¹x.
  auto const left = form == RepForm::kQuotient ? a : inverse_set(g, a);
  RepCounts r;
  r.counts.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) r.counts[x] = right_translate(g, left, x).intersection_size(b);
  return r;
}

Subgroup left_stabilizer(GroupTable const& g, ElemSet const& a) {
  require_nonempty(a, "left_stabilizer");
  ElemSet out(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (right_translate(g, a, x) == a) out.insert(x);
  return {out};
}

ElemSet qplus(GroupTable const& g, ElemSet const& a) {
  require_nonempty(a, "qplus");
  auto const q = quotient_set(g, a);
  auto const r = representation_counts(g, a, a, RepForm::kQuotient);
  auto const threshold = q.size() - a.size();
  ElemSet out(g.order());
  q.for_each([&](Element x) {
    if (r[x] > threshold) out.insert(x);
  });
  return out;
}

CheckReport check_box_kw(GroupTable const& g, ElemSet const& a, ElemSet const& b) {
  require_nonempty(a, "check_box_kw");
  require_nonempty(b, "check_box_kw");
  CheckReport rep;
  rep.subject = fmt::format("{} A={} B={}", g.spec(), a.to_string(), b.to_string());

  auto const q = quotient_set(g, a);
  auto const r = representation_counts(g, a, a, RepForm::kQuotient);
  auto const support = q.elements();
  std::string box;
  for (auto g1 : support) {
    for (auto g2 : support) {
      if (r[g1] + r[g2] > a.size() && !q.contains(g.mul(g.inv(g1), g2))) {
        box = fmt::format("g1={} g2={} r={}+{}", g1, g2, r[g1], r[g2]);
        break;
      }
    }
    if (!box.empty()) break;
  }
  rep.expect(box.empty(), "box_principle", box);

  auto const ab = product_set(g, a, b);
  auto const rp = representation_counts(g, a, b, RepForm::kProduct);
  std::string kw;
  ab.for_each([&](Element x) {
    if (kw.empty() && ab.size() + rp[x] < a.size() + b.size())
      kw = fmt::format("g={} |AB|={} |A|+|B|-r(g)={}", x, ab.size(), a.size() + b.size() - rp[x]);
  });
  rep.expect(kw.empty(), "kemperman_wehn", kw);
  return rep;
}

}  // namespace qset
