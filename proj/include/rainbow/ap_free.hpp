#pragma once
// Sets without three-term arithmetic progressions.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/int_set.hpp"

namespace rainbow {

struct ApCheck {
  bool ok = true;
  std::optional<std::array<std::int64_t, 3>> witness;  // x < y < z with x + z = 2y
};

/// Lexicographically first progression (x, y, z) when one exists.
inline ApCheck verify_3ap_free(const IntSet& s) {
  const auto& e = s.elems();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      const std::int64_t z = 2 * e[b] - e[a];
      if (s.contains(z)) return {false, std::array{e[a], e[b], z}};
    }
  return {};
}

inline constexpr std::int64_t kMaxBehrendN = 10'000'000;

/// Integers in [1, N] whose base-3 digits of (value - 1) are all 0 or 1. This is also the
/// set the greedy progression-free scan from 1 produces.
inline IntSet ternary_01_set(std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t bits = 0;; ++bits) {
    std::int64_t v = 0, place = 1;
    for (std::int64_t b = bits; b; b >>= 1, place *= 3)
      if (b & 1) v += place;
    if (v + 1 > N) {
      // Values grow with `bits`, so the first overshoot ends the scan.
      break;
    }
    out.push_back(v + 1);
  }
  return IntSet(std::move(out), N);
}

/// Best sphere shell of the digit cube {0..d-1}^m read in base 2d-1 (no carries on x + z),
/// over 2 <= d <= 64 and digit counts with (2d-1)^m <= N. Values are shifted by +1.
inline IntSet behrend_sphere_set(std::int64_t N) {
  std::vector<std::int64_t> best;
  for (int d = 2; d <= 64; ++d) {
    const std::int64_t base = 2 * d - 1;
    std::int64_t span = base;
    for (int m = 1; span <= N; ++m, span *= base) {
      std::map<std::int64_t, std::vector<std::int64_t>> shells;
      std::vector<int> digits(static_cast<std::size_t>(m), 0);
      for (;;) {
        std::int64_t value = 0, norm = 0;
        for (int i = m - 1; i >= 0; --i) {
          value = value * base + digits[i];
          norm += static_cast<std::int64_t>(digits[i]) * digits[i];
        }
        shells[norm].push_back(value + 1);
        int pos = 0;
        while (pos < m && digits[pos] == d - 1) digits[pos++] = 0;
        if (pos == m) break;
        ++digits[pos];
      }
      for (auto& [norm, members] : shells)
        if (members.size() > best.size()) best = members;
      if (span > N / base) break;
    }
  }
  return IntSet::from_unsorted(std::move(best), N);
}

/// Progression-free subset of [1, N]: the larger of the sphere construction and the
/// ternary {0,1}-digit set (the sphere wins only when strictly larger).
inline IntSet behrend_set(std::int64_t N) {
  if (N < 1) throw UsageError("N must be >= 1");
  if (N > kMaxBehrendN) throw BudgetError("behrend_set supports N <= 10^7");
  IntSet fallback = ternary_01_set(N);
  IntSet sphere = behrend_sphere_set(N);
  return sphere.size() > fallback.size() ? sphere : fallback;
}

}  // namespace rainbow
