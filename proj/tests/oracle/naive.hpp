// Slow reference implementations used to cross-check the library. Nothing
// here calls into the bitset code: sets are std::set, products come from a
// plain multiplication callback, inverses are found by search.
#ifndef QSET_TESTS_ORACLE_NAIVE_HPP_
#define QSET_TESTS_ORACLE_NAIVE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<unsigned>;

struct Group {
  std::size_t order = 0;
  std::function<unsigned(unsigned, unsigned)> mul;

  unsigned inv(unsigned x) const {
    for (unsigned y = 0; y < order; ++y)
      if (mul(x, y) == 0) return y;
    return order;  // not a group
  }
};

// Z/n by modular arithmetic.
inline Group cyclic(unsigned n) {
  return {n, [n](unsigned x, unsigned y) { return (x + y) % n; }};
}

// r^i s^e stored as i + e*n; s r = r^-1 s gives
// (r^i s^e)(r^j s^f) = r^(i + (-1)^e j) s^(e+f).
inline Group dihedral(unsigned n) {
  return {2 * n, [n](unsigned x, unsigned y) {
            unsigned const i = x % n, e = x / n, j = y % n, f = y / n;
            unsigned const k = e == 0 ? (i + j) % n : (i + n - j) % n;
            return k + ((e + f) % 2) * n;
          }};
}

// Dicyclic group of order 4m as pairs a^i x^e with x^2 = a^m and
// x a = a^-1 x.
inline Group dicyclic(unsigned m) {
  unsigned const n = 2 * m;
  return {2 * n, [n, m](unsigned x, unsigned y) {
            unsigned const i = x % n, e = x / n, j = y % n, f = y / n;
            unsigned k = e == 0 ? (i + j) % n : (i + n - j) % n;
            if (e == 1 && f == 1) k = (k + m) % n;
            return k + ((e + f) % 2 == 1 ? n : 0);
          }};
}

inline Group product(Group const& a, Group const& b) {
  auto const nb = b.order;
  return {a.order * nb, [a, b, nb](unsigned x, unsigned y) {
            return static_cast<unsigned>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
          }};
}

inline Set quotient(Group const& g, Set const& a) {
  Set q;
  for (auto x : a)
    for (auto y : a) q.insert(g.mul(g.inv(x), y));
  return q;
}

inline Set product_set(Group const& g, Set const& a, Set const& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(g.mul(x, y));
  return out;
}

// Pair enumeration: quotient form counts a^-1 b = t, product form ab = t.
inline std::vector<std::size_t> rep_counts(Group const& g, Set const& a, Set const& b, bool quotient_form) {
  std::vector<std::size_t> r(g.order, 0);
  for (auto x : a)
    for (auto y : b) ++r[quotient_form ? g.mul(g.inv(x), y) : g.mul(x, y)];
  return r;
}

inline Set double_coset(Group const& g, Set const& h, unsigned x) {
  Set out;
  for (auto p : h)
    for (auto q : h) out.insert(g.mul(g.mul(p, x), q));
  return out;
}

inline bool is_subgroup(Group const& g, Set const& s) {
  if (!s.count(0)) return false;
  for (auto x : s)
    for (auto y : s)
      if (!s.count(g.mul(x, y))) return false;
  return true;
}

// Every subgroup by testing all subsets containing 0; only for tiny orders.
inline std::vector<Set> all_subgroups(Group const& g) {
  std::vector<Set> out;
  for (unsigned long mask = 0; mask < (1UL << g.order); ++mask) {
    if (!(mask & 1UL)) continue;
    Set s;
    for (unsigned i = 0; i < g.order; ++i)
      if ((mask >> i) & 1UL) s.insert(i);
    if (is_subgroup(g, s)) out.push_back(s);
  }
  return out;
}

inline Set left_coset(Group const& g, unsigned x, Set const& h) {
  Set out;
  for (auto y : h) out.insert(g.mul(x, y));
  return out;
}

inline bool normalizes(Group const& g, unsigned x, Set const& h) {
  Set right;
  for (auto y : h) right.insert(g.mul(y, x));
  return left_coset(g, x, h) == right;
}

// Literal reading of the two structural conditions, searching all a, b ∈ G.
inline bool meets_conditions(Group const& g, Set const& a, std::vector<Set> const& subgroups) {
  for (auto const& h : subgroups) {
    for (unsigned x = 0; x < g.order; ++x) {
      auto const c = left_coset(g, x, h);
      if (5 * a.size() > 3 * h.size() && std::includes(c.begin(), c.end(), a.begin(), a.end())) return true;
    }
  }
  for (auto const& h : subgroups) {
    if (5 * a.size() <= 9 * h.size()) continue;
    for (unsigned x = 0; x < g.order; ++x) {
      for (unsigned y = 0; y < g.order; ++y) {
        auto const d = g.mul(g.inv(x), y);
        if (h.count(g.mul(d, d)) || !normalizes(g, d, h)) continue;
        auto cover = left_coset(g, x, h);
        for (auto z : left_coset(g, y, h)) cover.insert(z);
        if (std::includes(cover.begin(), cover.end(), a.begin(), a.end())) return true;
      }
    }
  }
  return false;
}

// min |A^-1 A| for each |A|, over all 2^|G| subsets.
inline std::vector<std::size_t> min_quotient_by_size(Group const& g) {
  std::vector<std::size_t> best(g.order + 1, g.order + 1);
  for (unsigned long mask = 1; mask < (1UL << g.order); ++mask) {
    Set a;
    for (unsigned i = 0; i < g.order; ++i)
      if ((mask >> i) & 1UL) a.insert(i);
    best[a.size()] = std::min(best[a.size()], quotient(g, a).size());
  }
  return best;
}

}  // namespace oracle

#endif  // QSET_TESTS_ORACLE_NAIVE_HPP_
