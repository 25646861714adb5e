#pragma once
// Linear equations a_1 x_1 + ... + a_k x_k = 0: genus, trivial solutions, solution search
// and maximal solution-free subsets.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/int_set.hpp"

namespace rainbow {

class LinearEquation {
 public:
  explicit LinearEquation(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw UsageError("an equation needs at least two variables");
    for (auto a : coeffs_)
      if (a == 0) throw UsageError("equation coefficients must be nonzero");
  }

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t arity() const noexcept { return coeffs_.size(); }

  std::int64_t evaluate(const std::vector<std::int64_t>& x) const {
    if (x.size() != coeffs_.size()) throw UsageError("assignment length does not match the equation");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += coeffs_[i] * x[i];
    return acc;
  }

  std::string to_string() const {
    std::string lhs, rhs;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const std::int64_t a = coeffs_[i];
      std::string& side = a > 0 ? lhs : rhs;
      const std::int64_t mag = a > 0 ? a : -a;
      if (!side.empty()) side += " + ";
      if (mag != 1) side += std::to_string(mag);
      side += "x" + std::to_string(i + 1);
    }
    return (lhs.empty() ? "0" : lhs) + " = " + (rhs.empty() ? "0" : rhs);
  }

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

class EquationSystem {
 public:
  explicit EquationSystem(std::vector<LinearEquation> eqs) : eqs_(std::move(eqs)) {
    if (eqs_.empty()) throw UsageError("an equation system must contain at least one equation");
  }
  const std::vector<LinearEquation>& equations() const noexcept { return eqs_; }

 private:
  std::vector<LinearEquation> eqs_;
};

/// Partition of [k]; parts hold 1-based indices in increasing order.
struct Partition {
  std::vector<std::vector<int>> parts;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct GenusResult {
  int genus = 0;
  std::optional<Partition> witness;
};

inline constexpr std::size_t kMaxGenusArity = 12;

/// Largest number of parts in a partition of the indices with every part's coefficient sum
/// zero; 0 when none exists. Partitions are scanned as restricted growth strings, so the
/// witness is the first maximal one in that order.
inline GenusResult genus(const LinearEquation& eq) {
  const auto& a = eq.coeffs();
  const int k = static_cast<int>(a.size());
  if (a.size() > kMaxGenusArity) throw BudgetError("genus search supports at most 12 variables");
  GenusResult out;
  std::int64_t total = 0;
  for (auto c : a) total += c;
  if (total != 0) return out;

  std::vector<int> block(static_cast<std::size_t>(k), 0), best_block;
  std::vector<std::int64_t> part_sum(static_cast<std::size_t>(k), 0);
  int best = 0;

  auto search = [&](auto& self, int i, int parts) -> void {
    if (i == k) {
      for (int p = 0; p < parts; ++p)
        if (part_sum[p] != 0) return;
      if (parts > best) {
        best = parts;
        best_block = block;
      }
      return;
    }
    // Every open nonzero part needs one of the remaining indices; new parts are at most
    // (k - i) more, and each new part needs two indices.
    int nonzero = 0;
    for (int p = 0; p < parts; ++p) nonzero += part_sum[p] != 0;
    if (nonzero > k - i) return;
    if (parts + (k - i - nonzero) / 2 <= best) return;
    for (int p = 0; p <= parts && p < k; ++p) {
      block[i] = p;
      part_sum[p] += a[i];
      self(self, i + 1, std::max(parts, p + 1));
      part_sum[p] -= a[i];
    }
  };
  search(search, 0, 0);

  out.genus = best;
  Partition w;
  w.parts.resize(static_cast<std::size_t>(best));
  for (int i = 0; i < k; ++i) w.parts[best_block[i]].push_back(i + 1);
  out.witness = std::move(w);
  return out;
}

namespace detail {

// Partition of indices by equal values has zero coefficient sum on every part.
inline bool value_classes_balanced(const std::vector<std::int64_t>& coeffs, const std::int64_t* x) {
  const std::size_t k = coeffs.size();
  for (std::size_t i = 0; i < k; ++i) {
    bool first = true;
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] == x[i]) {
        first = false;
        break;
      }
    if (!first) continue;
    std::int64_t sum = 0;
    for (std::size_t j = i; j < k; ++j)
      if (x[j] == x[i]) sum += coeffs[j];
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace detail

/// True iff x solves eq and the partition of indices into equal-value classes has every
/// part summing to zero. Throws UsageError when x is not a solution.
inline bool is_trivial_solution(const LinearEquation& eq, const std::vector<std::int64_t>& x) {
  if (eq.evaluate(x) != 0) throw UsageError("assignment does not satisfy the equation");
  return detail::value_classes_balanced(eq.coeffs(), x.data());
}

inline constexpr std::uint64_t kDefaultSolutionBudget = 200'000'000;

namespace detail {

// Lexicographic DFS over S^k with interval pruning; the last variable is solved directly.
// If `required` is set, only assignments using that value somewhere are reported.
template <typename Fn>
bool search_solutions(const LinearEquation& eq, const std::vector<std::int64_t>& values,
                      std::optional<std::int64_t> required, std::uint64_t& budget, Fn&& fn) {
  const auto& a = eq.coeffs();
  const int k = static_cast<int>(a.size());
  if (values.empty()) return true;
  const std::int64_t lo = values.front(), hi = values.back();

  // Range of sum_{i >= p} a_i x_i.
  std::vector<std::int64_t> suf_min(static_cast<std::size_t>(k) + 1, 0), suf_max(static_cast<std::size_t>(k) + 1, 0);
  for (int p = k - 1; p >= 0; --p) {
    suf_min[p] = suf_min[p + 1] + std::min(a[p] * lo, a[p] * hi);
    suf_max[p] = suf_max[p + 1] + std::max(a[p] * lo, a[p] * hi);
  }
  std::vector<std::int64_t> x(static_cast<std::size_t>(k));

  auto rec = [&](auto& self, int p, std::int64_t partial, int uses) -> bool {
    if (budget == 0) throw BudgetError("solution search exceeded its budget");
    --budget;
    if (p == k - 1) {
      if (-partial % a[p] != 0) return true;
      const std::int64_t last = -partial / a[p];
      if (!std::binary_search(values.begin(), values.end(), last)) return true;
      x[p] = last;
      if (required && uses == 0 && last != *required) return true;
      if (value_classes_balanced(a, x.data())) return true;
      return fn(static_cast<const std::vector<std::int64_t>&>(x));
    }
    for (std::int64_t v : values) {
      const std::int64_t next = partial + a[p] * v;
      if (next + suf_min[p + 1] > 0 || next + suf_max[p + 1] < 0) continue;
      x[p] = v;
      if (!self(self, p + 1, next, uses + (required && v == *required))) return false;
    }
    return true;
  };
  return rec(rec, 0, 0, 0);
}

}  // namespace detail

/// Calls fn(x) for every nontrivial solution x in S^k, lexicographically; fn returns false
/// to stop. `budget` bounds the number of search nodes.
template <typename Fn>
void for_each_nontrivial_solution(const LinearEquation& eq, const IntSet& s, Fn&& fn,
                                  std::uint64_t budget = kDefaultSolutionBudget) {
  if (eq.arity() > kMaxGenusArity) throw BudgetError("solution search supports at most 12 variables");
  detail::search_solutions(eq, s.elems(), std::nullopt, budget, fn);
}

inline std::vector<std::vector<std::int64_t>> find_solutions(const LinearEquation& eq, const IntSet& s,
                                                             std::uint64_t budget = kDefaultSolutionBudget) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_nontrivial_solution(
      eq, s,
      [&](const std::vector<std::int64_t>& x) {
        out.push_back(x);
        return true;
      },
      budget);
  return out;
}

/// True iff some equation of the system has a nontrivial solution over `values` using `c`.
/// `values` must be sorted and contain c.
inline bool creates_solution(const EquationSystem& sys, const std::vector<std::int64_t>& values, std::int64_t c,
                             std::uint64_t& budget) {
  for (const auto& eq : sys.equations()) {
    bool found = false;
    detail::search_solutions(eq, values, c, budget, [&](const std::vector<std::int64_t>&) {
      found = true;
      return false;
    });
    if (found) return true;
  }
  return false;
}

enum class SearchMode { greedy, exhaustive };

struct FreeSubsetResult {
  IntSet set;
  bool optimal = false;
};

/// Thrown when a free-subset search runs out of budget; carries the best set found.
class SubsetBudgetError : public BudgetError {
 public:
  SubsetBudgetError(const std::string& what, IntSet best) : BudgetError(what), best_(std::move(best)) {}
  const IntSet& best_so_far() const noexcept { return best_; }

 private:
  IntSet best_;
};

inline constexpr std::int64_t kMaxExhaustiveN = 40;
inline constexpr std::int64_t kMaxGreedyN = 100'000;

/// Subset of [1, N] with no nontrivial solution to any equation of the system.
/// Greedy keeps each integer that creates no solution with those already kept; exhaustive
/// returns a maximum-size subset (the first found, include-before-exclude from 1 upward).
inline FreeSubsetResult equation_free_subset(const EquationSystem& sys, std::int64_t N, SearchMode mode,
                                             std::uint64_t budget = kDefaultSolutionBudget) {
  if (N < 1) throw UsageError("N must be >= 1");
  for (const auto& eq : sys.equations())
    if (eq.arity() > kMaxGenusArity) throw BudgetError("equations with more than 12 variables are not supported");

  std::vector<std::int64_t> kept;
  if (mode == SearchMode::greedy) {
    if (N > kMaxGreedyN) throw UsageError("greedy mode supports N <= 100000");
    try {
      for (std::int64_t c = 1; c <= N; ++c) {
        kept.push_back(c);
        if (creates_solution(sys, kept, c, budget)) kept.pop_back();
      }
    } catch (const BudgetError&) {
      kept.pop_back();
      throw SubsetBudgetError("greedy free-subset search exceeded its budget", IntSet(kept, N));
    }
    return {IntSet(std::move(kept), N), false};
  }

  if (N > kMaxExhaustiveN) throw UsageError("exhaustive mode supports N <= 40");
  std::vector<std::int64_t> best;
  auto rec = [&](auto& self, std::int64_t c) -> void {
    if (kept.size() > best.size()) best = kept;
    if (c > N || static_cast<std::int64_t>(kept.size()) + (N - c + 1) <= static_cast<std::int64_t>(best.size()))
      return;
    kept.push_back(c);
    if (!creates_solution(sys, kept, c, budget)) self(self, c + 1);
    kept.pop_back();
    self(self, c + 1);
  };
  try {
    rec(rec, 1);
  } catch (const BudgetError&) {
    throw SubsetBudgetError("exhaustive free-subset search exceeded its budget", IntSet(best, N));
  }
  return {IntSet(std::move(best), N), true};
}

/// The three-equation system whose solution-free sets would give C_k-rainbow colorings for
/// k = 2 (mod 4), with m = floor(k/4):
///   x_1 + ... + x_m = x_{m+1} + ... + x_{2m}
///   x_1 + ... + x_{m+1} = x_{m+2} + ... + x_{2m} + 2 x_{2m+1}
///   x_1 + ... + x_{m-1} + 2 x_m = x_{m+1} + ... + x_{2m-1} + 2 x_{2m}
inline EquationSystem conjecture_system(int k) {
  if (k < 10 || k % 4 != 2) throw UsageError("conjecture system needs k = 2 (mod 4) and k >= 10");
  const int m = k / 4;
  std::vector<std::int64_t> e1, e2, e3;
  for (int i = 0; i < m; ++i) e1.push_back(1);
  for (int i = 0; i < m; ++i) e1.push_back(-1);

  for (int i = 0; i < m + 1; ++i) e2.push_back(1);
  for (int i = 0; i < m - 1; ++i) e2.push_back(-1);
  e2.push_back(-2);

  for (int i = 0; i < m - 1; ++i) e3.push_back(1);
  e3.push_back(2);
  for (int i = 0; i < m - 1; ++i) e3.push_back(-1);
  e3.push_back(-2);

  return EquationSystem({LinearEquation(e1), LinearEquation(e2), LinearEquation(e3)});
}

/// x_1 + x_2 = 2 x_3: solution-free sets are exactly the progression-free sets.
inline EquationSystem three_ap_system() { return EquationSystem({LinearEquation({1, 1, -2})}); }

}  // namespace rainbow
