#include "qset/elem_set.hpp"

#include <algorithm>

#include "qset/errors.hpp"

namespace qset {

ElemSet ElemSet::full(std::size_t universe) {
  ElemSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (auto rem = universe % kWordBits; rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
  return s;
}

ElemSet ElemSet::of(std::size_t universe, std::initializer_list<Element> elems) {
  return of(universe, std::span<const Element>(elems.begin(), elems.size()));
}

ElemSet ElemSet::of(std::size_t universe, std::span<const Element> elems) {
  ElemSet s(universe);
  for (auto x : elems) s.insert(x);
  return s;
}

ElemSet ElemSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw PreconditionError("from_mask needs a universe of at most 64");
  ElemSet s(universe);
  if (universe < kWordBits) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ElemSet::insert(Element x) {
  if (x >= universe_) {
    throw PreconditionError("element " + std::to_string(x) + " out of range for group of order " +
                            std::to_string(universe_));
  }
  words_[x / kWordBits] |= std::uint64_t{1} << (x % kWordBits);
}

Element ElemSet::min() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0)
      return static_cast<Element>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return static_cast<Element>(universe_);
}

std::vector<Element> ElemSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

void ElemSet::check_universe(ElemSet const& other) const {
  if (universe_ != other.universe_) throw PreconditionError("sets belong to groups of different order");
}

bool ElemSet::is_subset_of(ElemSet const& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool ElemSet::intersects(ElemSet const& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

std::size_t ElemSet::intersection_size(ElemSet const& other) const {
  check_universe(other);
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  return n;
}

ElemSet& ElemSet::operator|=(ElemSet const& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator&=(ElemSet const& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator-=(ElemSet const& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::uint64_t ElemSet::to_mask() const {
  if (universe_ > kWordBits) throw PreconditionError("to_mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering operator<=>(ElemSet const& a, ElemSet const& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string ElemSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element x) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace qset
