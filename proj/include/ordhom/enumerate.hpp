#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordhom/mapping.hpp"

namespace ordhom {

/// Exact binomial coefficient in 64 bits; throws on overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Exact at every step: the product of i consecutive integers is
    // divisible by i!.
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
    if (result > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

/// Number of monotone maps [n] -> [h]; equals C(n+h-1, h-1). The empty map
/// counts once when n = 0 (for any h, including 0).
inline std::uint64_t monotone_map_count(int n, int h) {
  if (n < 0 || h < 0) throw std::invalid_argument("negative dimension");
  if (n == 0) return 1;
  return binomial(static_cast<std::int64_t>(n) + h - 1, h - 1);
}

/// Streams every monotone (order-preserving) map f : [n] -> [h] exactly
/// once, in lexicographic order of the target vector (1,1,...,1) first.
class MonotoneMapEnumerator {
 public:
  MonotoneMapEnumerator(int n, int h) : n_(n), h_(h) {
    if (n < 0 || h < 0) throw std::invalid_argument("negative dimension");
    done_ = n_ > 0 && h_ == 0;  // no map exists for a nonempty domain
    targets_.assign(n_, 1);
  }

  /// Current target vector, or nullptr once exhausted.
  const std::vector<int>* next() {
    if (done_) return nullptr;
    if (first_) {
      first_ = false;
      return &targets_;
    }
    // Lexicographic successor among nondecreasing vectors: bump the
    // rightmost entry below h, then level the tail to the new value.
    int pos = n_ - 1;
    while (pos >= 0 && targets_[pos] == h_) --pos;
    if (pos < 0) {
      done_ = true;
      return nullptr;
    }
    int value = targets_[pos] + 1;
    for (int k = pos; k < n_; ++k) targets_[k] = value;
    return &targets_;
  }

 private:
  int n_;
  int h_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> targets_;
};

template <typename Visitor>
void for_each_monotone_map(int n, int h, Visitor&& visit) {
  MonotoneMapEnumerator en(n, h);
  while (const auto* targets = en.next()) visit(*targets);
}

}  // namespace ordhom
