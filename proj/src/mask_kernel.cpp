#include "qset/mask_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "qset/errors.hpp"

namespace qset {

MaskKernel::MaskKernel(GroupTable const& g) : order_(g.order()), chunks_((g.order() + 7) / 8) {
  if (order_ > 64) throw PreconditionError("mask kernel needs a group of order at most 64");
  inv_.resize(order_);
  table_.assign(order_ * chunks_ * 256, 0);
  for (Element x = 0; x < order_; ++x) {
    inv_[x] = g.inv(x);
    for (std::size_t c = 0; c < chunks_; ++c) {
      auto* row = &table_[(x * chunks_ + c) * 256];
      for (std::size_t byte = 1; byte < 256; ++byte) {
        // Build from the entry with the lowest bit removed.
        auto const low = static_cast<std::size_t>(std::countr_zero(byte));
        auto const y = c * 8 + low;
        if (y >= order_) continue;
        row[byte] = row[byte & (byte - 1)] | (std::uint64_t{1} << g.mul(x, static_cast<Element>(y)));
      }
    }
  }
}

std::size_t partition_count(std::size_t order, std::size_t jobs) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < std::max<std::size_t>(jobs, 1)) ++bits;
  std::size_t const free = order > 0 ? order - 1 : 0;
  return std::size_t{1} << std::min(bits, free);
}

namespace {

// Calls f(v) for every v < 2^width with popcount(v) == ones, in increasing order.
template <typename F>
void for_each_combination(unsigned width, unsigned ones, F&& f) {
  if (ones > width) return;
  if (ones == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t const limit = std::uint64_t{1} << width;
  std::uint64_t v = (ones == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << ones) - 1;
  while (v < limit) {
    f(v);
    std::uint64_t const c = v & (~v + 1);
    std::uint64_t const r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

}  // namespace

void for_each_canonical(MaskKernel const& kernel, unsigned lo, unsigned hi, std::size_t jobs,
                        std::function<void(std::size_t part, CanonicalSubset const&)> const& visit) {
  auto const n = static_cast<unsigned>(kernel.order());
  if (n == 0) return;
  hi = std::min(hi, n);
  lo = std::max(lo, 1U);
  if (lo > hi) return;

  auto const parts = partition_count(n, jobs);
  auto const fixed = static_cast<unsigned>(std::countr_zero(parts));
  auto const free_width = n - 1 - fixed;

  auto run_part = [&](std::size_t part) {
    std::uint64_t const pattern = static_cast<std::uint64_t>(part) << 1;
    auto const pattern_ones = static_cast<unsigned>(std::popcount(pattern));
    Element members[64];
    for (unsigned k = lo; k <= hi; ++k) {
      if (k < 1 + pattern_ones) continue;
      for_each_combination(free_width, k - 1 - pattern_ones, [&](std::uint64_t free) {
        std::uint64_t const mask = 1U | pattern | (free << (1 + fixed));
        unsigned count = 0;
        for (auto bits = mask; bits != 0; bits &= bits - 1)
          members[count++] = static_cast<Element>(std::countr_zero(bits));
        std::uint64_t quotient = mask;
        std::uint64_t stab = 1;
        for (unsigned i = 1; i < count; ++i) {
          auto const t = kernel.left(kernel.inv(members[i]), mask);
          if (t < mask) return;
          if (t == mask) ++stab;
          quotient |= t;
        }
        visit(part, CanonicalSubset{mask, quotient, count, n / stab});
      });
    }
  };

  auto const workers = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), parts);
  if (workers == 1) {
    for (std::size_t p = 0; p < parts; ++p) run_part(p);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t p = next++; p < parts; p = next++) {
        try {
          run_part(p);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qset
