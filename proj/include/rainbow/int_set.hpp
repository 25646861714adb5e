#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

/// Sorted set of distinct positive integers inside [1, cap].
class IntSet {
 public:
  IntSet() = default;

  /// Validates strict increase, positivity and the cap; cap 0 means "use the maximum".
  explicit IntSet(std::vector<std::int64_t> elems, std::int64_t cap = 0) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1) throw UsageError("set elements must be positive");
      if (i > 0 && elems_[i] <= elems_[i - 1])
        throw UsageError("set elements must be strictly increasing");
    }
    cap_ = cap == 0 ? max() : cap;
    if (!elems_.empty() && elems_.back() > cap_)
      throw UsageError("set element " + std::to_string(elems_.back()) + " exceeds cap " +
                       std::to_string(cap_));
  }

  /// Sorts and deduplicates first.
  static IntSet from_unsorted(std::vector<std::int64_t> elems, std::int64_t cap = 0) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return IntSet(std::move(elems), cap);
  }

  const std::vector<std::int64_t>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  std::int64_t cap() const noexcept { return cap_; }
  std::int64_t max() const noexcept { return elems_.empty() ? 0 : elems_.back(); }
  std::int64_t operator[](std::size_t i) const { return elems_[i]; }
  bool contains(std::int64_t x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  /// The first `count` elements (cap shrunk to their maximum).
  IntSet prefix(std::size_t count) const {
    if (count > elems_.size()) throw UsageError("set has fewer than " + std::to_string(count) + " elements");
    return IntSet(std::vector<std::int64_t>(elems_.begin(), elems_.begin() + count));
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<std::int64_t> elems_;
  std::int64_t cap_ = 0;
};

}  // namespace rainbow
