#pragma once
// B_t sets (generalized Sidon sets): verification, greedy generation and the
// Bose–Chowla finite-field construction.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/finite_field.hpp"
#include "rainbow/int_set.hpp"

namespace rainbow {

struct BtCheck {
  bool ok = true;
  /// Two distinct size-t multisets (sorted values) with equal sums; set when !ok.
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> witness;
};

/// Checks that all size-t multiset sums (repetition allowed) are pairwise distinct.
/// With modulus > 0 sums are compared modulo it. The witness pair is (A, B) where B is
/// the lexicographically first multiset whose sum repeats and A the first one before it.
inline BtCheck verify_bt(const IntSet& s, int t, std::int64_t modulus = 0) {
  if (t < 1) throw UsageError("t must be >= 1");
  BtCheck out;
  const std::size_t n = s.size();
  if (n == 0) return out;

  std::unordered_map<std::int64_t, std::vector<std::size_t>> first_with_sum;
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  auto values = [&](const std::vector<std::size_t>& ix) {
    std::vector<std::int64_t> v;
    v.reserve(ix.size());
    for (auto i : ix) v.push_back(s[i]);
    return v;
  };
  for (;;) {
    std::int64_t sum = 0;
    for (auto i : idx) sum += s[i];
    if (modulus > 0) sum %= modulus;
    auto [it, inserted] = first_with_sum.try_emplace(sum, idx);
    if (!inserted) {
      out.ok = false;
      out.witness = std::make_pair(values(it->second), values(idx));
      return out;
    }
    // Next non-decreasing index tuple.
    int pos = t - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < t; ++q) idx[q] = idx[pos];
  }
  return out;
}

/// Greedy B_t set: start at 1 and keep appending the smallest integer that preserves the
/// B_t property, until `size` elements.
inline IntSet greedy_bt(int t, std::size_t size) {
  if (t < 1) throw UsageError("t must be >= 1");
  if (size < 1) throw UsageError("size must be >= 1");

  std::vector<std::int64_t> elems;
  // sums[r] lists every r-multiset sum of the current set (r = 0..t-1);
  // taken marks every t-multiset sum.
  std::vector<std::vector<std::int64_t>> sums(static_cast<std::size_t>(t));
  sums[0] = {0};
  std::vector<char> taken;
  std::vector<std::int64_t> fresh;

  auto mark = [&](std::int64_t v) {
    if (static_cast<std::size_t>(v) >= taken.size()) taken.resize(static_cast<std::size_t>(v) * 2 + 16, 0);
    taken[static_cast<std::size_t>(v)] = 1;
  };
  auto is_taken = [&](std::int64_t v) {
    return static_cast<std::size_t>(v) < taken.size() && taken[static_cast<std::size_t>(v)];
  };

  for (std::int64_t c = 1; elems.size() < size; ++c) {
    // New t-sums use c exactly j >= 1 times together with an (t-j)-multiset of old elements.
    fresh.clear();
    bool ok = true;
    for (int j = 1; j <= t && ok; ++j)
      for (std::int64_t base : sums[t - j]) {
        const std::int64_t v = base + j * c;
        if (is_taken(v)) {
          ok = false;
          break;
        }
        fresh.push_back(v);
      }
    if (ok) {
      std::sort(fresh.begin(), fresh.end());
      ok = std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
    }
    if (!ok) continue;

    for (auto v : fresh) mark(v);
    // Extend the lower-order sum lists, highest order first so each uses the old lists.
    for (int r = t - 1; r >= 1; --r)
      for (int j = 1; j <= r; ++j)
        for (std::int64_t base : sums[r - j])
          sums[r].push_back(base + j * c);
    elems.push_back(c);
  }
  return IntSet(std::move(elems));
}

/// Bose–Chowla B_t set of size q in [1, q^t - 1]: discrete logs of theta + a, a in Z_q,
/// for a primitive element theta of GF(q^t). Logs are lifted to representatives in
/// [1, q^t - 1] (log 0 becomes q^t - 1). The result is B_t modulo q^t - 1, hence over Z.
inline IntSet bose_chowla(int t, int q) {
  if (t < 2) throw UsageError("Bose-Chowla needs t >= 2");
  if (!is_prime(q)) throw UsageError("Bose-Chowla supports prime q only, got " + std::to_string(q));
  PrimeExtensionField field(q, t);
  const std::int64_t group = field.order() - 1;
  const std::int64_t theta = field.primitive_element();

  std::vector<std::int64_t> log(static_cast<std::size_t>(field.order()), -1);
  std::int64_t cur = 1;
  for (std::int64_t e = 0; e < group; ++e) {
    log[static_cast<std::size_t>(cur)] = e;
    cur = field.mul(cur, theta);
  }
  if (cur != 1) throw InternalError("primitive element has the wrong order");

  std::vector<std::int64_t> elems;
  for (int a = 0; a < q; ++a) {
    const std::int64_t v = field.add(theta, a);
    const std::int64_t e = log[static_cast<std::size_t>(v)];
    if (e < 0) throw InternalError("theta + a is zero; theta lies in the base field");
    elems.push_back(e == 0 ? group : e);
  }
  return IntSet::from_unsorted(std::move(elems), group);
}

}  // namespace rainbow
