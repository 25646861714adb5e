#pragma once
// Exact vertex coloring of small dense graphs: DSATUR branch and bound with clique seeding.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline Deadline deadline_after(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

inline bool expired(const Deadline& d) { return d && std::chrono::steady_clock::now() >= *d; }

/// Undirected simple graph stored as adjacency bit rows.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n = 0) : n_(n), words_((n + 63) / 64), bits_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::size_t degree(std::size_t u) const noexcept {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
    return d;
  }

  std::vector<std::size_t> neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t b = bits_[u * words_ + w]; b; b &= b - 1)
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  bool is_clique(std::span<const std::size_t> vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!adjacent(vs[a], vs[b])) return false;
    return true;
  }

  /// True iff adjacent vertices always get different colors.
  bool is_proper(std::span<const int> colors) const {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : neighbors(u))
        if (v > u && colors[u] == colors[v]) return false;
    return true;
  }

  std::size_t edge_count() const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += degree(u);
    return d / 2;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Greedy clique: repeatedly take the highest-degree vertex adjacent to all chosen ones.
inline std::vector<std::size_t> greedy_clique(const BitGraph& g) {
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    bool ok = true;
    for (std::size_t c : clique) ok = ok && g.adjacent(v, c);
    if (ok) clique.push_back(v);
  }
  return clique;
}

/// Heuristic DSATUR coloring (colors 0..k-1).
inline std::vector<int> dsatur_coloring(const BitGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  std::vector<std::vector<char>> seen(n);
  std::vector<int> sat(n, 0);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick == n || sat[v] > sat[pick] || (sat[v] == sat[pick] && deg[v] > deg[pick])) pick = v;
    }
    int c = 0;
    while (c < static_cast<int>(seen[pick].size()) && seen[pick][c]) ++c;
    color[pick] = c;
    for (std::size_t u : g.neighbors(pick)) {
      if (static_cast<int>(seen[u].size()) <= c) seen[u].resize(static_cast<std::size_t>(c) + 1, 0);
      if (!seen[u][c]) {
        seen[u][c] = 1;
        ++sat[u];
      }
    }
  }
  return color;
}

struct ChromaticResult {
  int colors = 0;
  std::vector<int> assignment;
};

/// Raised when the exact search hits its deadline; carries certified bounds.
class ChromaticTimeout : public BudgetError {
 public:
  ChromaticTimeout(int lower, int upper)
      : BudgetError("search timed out with bounds [" + std::to_string(lower) + ", " + std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper) {}
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

/// Chromatic number by DSATUR-ordered branch and bound. `clique` (a clique of g) is
/// pre-colored 0..q-1 and bounds the search from below.
inline ChromaticResult chromatic_number(const BitGraph& g, std::vector<std::size_t> clique = {},
                                        Deadline deadline = std::nullopt) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  if (!g.is_clique(clique)) throw UsageError("seed vertices do not form a clique");
  if (auto greedy = greedy_clique(g); greedy.size() > clique.size()) clique = std::move(greedy);
  const int lower = static_cast<int>(clique.size());

  ChromaticResult best{0, dsatur_coloring(g)};
  best.colors = *std::max_element(best.assignment.begin(), best.assignment.end()) + 1;
  if (best.colors == lower) return best;

  const int max_colors = best.colors;
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
    deg[v] = adj[v].size();
  }
  std::vector<int> color(n, -1);
  std::vector<int> nbr_count(n * static_cast<std::size_t>(max_colors), 0);
  std::vector<int> sat(n, 0);

  auto assign = [&](std::size_t v, int c) {
    color[v] = c;
    for (std::size_t u : adj[v])
      if (nbr_count[u * max_colors + c]++ == 0) ++sat[u];
  };
  auto unassign = [&](std::size_t v) {
    const int c = color[v];
    color[v] = -1;
    for (std::size_t u : adj[v])
      if (--nbr_count[u * max_colors + c] == 0) --sat[u];
  };

  for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));

  std::uint64_t nodes = 0;
  bool done = false;
  auto search = [&](auto& self, std::size_t colored, int used) -> void {
    if (done) return;
    if ((++nodes & 1023) == 0 && expired(deadline)) throw ChromaticTimeout(lower, best.colors);
    if (colored == n) {
      best.colors = used;
      best.assignment = color;
      done = used == lower;
      return;
    }
    std::size_t v = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v == n || sat[u] > sat[v] || (sat[u] == sat[v] && deg[u] > deg[v])) v = u;
    }
    for (int c = 0; c < used && used < best.colors; ++c) {
      if (nbr_count[v * max_colors + c]) continue;
      assign(v, c);
      self(self, colored + 1, used);
      unassign(v);
      if (done) return;
    }
    if (used + 1 < best.colors) {
      assign(v, used);
      self(self, colored + 1, used + 1);
      unassign(v);
    }
  };
  search(search, clique.size(), lower);
  return best;
}

}  // namespace rainbow
