#ifndef QSET_ELEM_SET_HPP_
#define QSET_ELEM_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qset {

// Element ids index rows of a GroupTable. Id 0 is always the identity.
using Element = std::uint32_t;

// Subset of a finite group, stored as a bit vector over element ids.
//
// Bits at positions >= universe() are always zero, so whole-word operations
// (union, comparison, popcount) need no masking. Sets over different
// universes never compare equal.
class ElemSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ElemSet full(std::size_t universe);
  static ElemSet of(std::size_t universe, std::initializer_list<Element> elems);
  static ElemSet of(std::size_t universe, std::span<const Element> elems);
  // Bit i of `mask` is membership of element i. Requires universe <= 64.
  static ElemSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U);
  }
  void insert(Element x);
  void erase(Element x) noexcept {
    if (x < universe_) words_[x / kWordBits] &= ~(std::uint64_t{1} << (x % kWordBits));
  }

  // Smallest member, or universe() when empty.
  Element min() const noexcept;
  std::vector<Element> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        f(static_cast<Element>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(ElemSet const& other) const;
  bool intersects(ElemSet const& other) const;
  std::size_t intersection_size(ElemSet const& other) const;

  ElemSet& operator|=(ElemSet const& other);
  ElemSet& operator&=(ElemSet const& other);
  ElemSet& operator-=(ElemSet const& other);
  friend ElemSet operator|(ElemSet a, ElemSet const& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, ElemSet const& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, ElemSet const& b) { return a -= b; }

  std::uint64_t to_mask() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(ElemSet const&, ElemSet const&) = default;
  // Orders by universe, then by the bit vector read as an unsigned integer.
  friend std::strong_ordering operator<=>(ElemSet const& a, ElemSet const& b);

  // Set literal, e.g. "{0, 4, 8}".
  std::string to_string() const;

 private:
  void check_universe(ElemSet const& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qset

#endif  // QSET_ELEM_SET_HPP_
