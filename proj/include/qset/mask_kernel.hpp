#ifndef QSET_MASK_KERNEL_HPP_
#define QSET_MASK_KERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qset/group_table.hpp"

namespace qset {

// Left translation of 64-bit subset masks through per-byte lookup tables:
// x·A is the OR of one table entry per byte of A. Only for |G| <= 64.
class MaskKernel {
 public:
  explicit MaskKernel(GroupTable const& g);

  std::size_t order() const noexcept { return order_; }
  Element inv(Element x) const noexcept { return inv_[x]; }

  std::uint64_t left(Element x, std::uint64_t mask) const noexcept {
    auto const* row = &table_[x * chunks_ * 256];
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c, mask >>= 8) out |= row[c * 256 + (mask & 0xFF)];
    return out;
  }

 private:
  std::size_t order_;
  std::size_t chunks_;
  std::vector<Element> inv_;
  std::vector<std::uint64_t> table_;  // [x][chunk][byte]
};

// One left-translation class, represented by its minimal translate.
struct CanonicalSubset {
  std::uint64_t mask = 0;      // contains bit 0
  std::uint64_t quotient = 0;  // A⁻¹A
  unsigned size = 0;
  std::uint64_t orbit_size = 0;  // |G| / |{g : gA = A}|
};

// Number of work parts for `jobs` workers: 2^ceil(log2 jobs), limited by
// the number of non-identity elements.
std::size_t partition_count(std::size_t order, std::size_t jobs);

// Visits every canonical subset with lo <= |A| <= hi. Part p fixes the
// membership of elements 1..log2(parts) to the bits of p; parts are handed
// to `jobs` threads, and `visit` receives the part index so callers can keep
// private per-part buffers. Visit order within a part is deterministic, the
// interleaving across parts is not.
void for_each_canonical(MaskKernel const& kernel, unsigned lo, unsigned hi, std::size_t jobs,
                        std::function<void(std::size_t part, CanonicalSubset const&)> const& visit);

}  // namespace qset

#endif  // QSET_MASK_KERNEL_HPP_
