#pragma once
// Edge colorings of Q_n and the two arithmetic constructions.
//
// Construction 1 (k = 0 mod 4): for an edge with bottom v, direction j and level p,
//   color = (a(v) + M*j, p mod k/2), a(v) = sum of s_i over i in v,
// with S a B_t set, t = k/4 - 1, and M = (k/4)*max(S) + 1.
// Construction 2 (k = 6): color = ((a(v) + 2*s_j) mod 2N, p mod 3), with S progression-free
// inside [1, N].

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rainbow/addsets.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypercube.hpp"

namespace rainbow {

struct ColorPair {
  std::int64_t d = 0;
  std::int64_t p = 0;
  friend auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

enum class Scheme { construction1, construction2, explicit_colors };

inline std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::construction1: return "c1";
    case Scheme::construction2: return "c2";
    case Scheme::explicit_colors: return "explicit";
  }
  return "explicit";
}

inline Scheme parse_scheme(std::string_view name) {
  if (name == "c1") return Scheme::construction1;
  if (name == "c2") return Scheme::construction2;
  if (name == "explicit") return Scheme::explicit_colors;
  throw UsageError("unknown scheme '" + std::string(name) + "' (expected c1, c2 or explicit)");
}

/// Exact nonnegative rational, parsed from "3", "0.25" or "1/4".
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(std::string_view text) {
    auto fail = [&] { return UsageError("cannot parse rational '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    Rational r;
    auto digits_only = [](std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto a = text.substr(0, slash), b = text.substr(slash + 1);
      if (!digits_only(a) || !digits_only(b) || a.size() > 15 || b.size() > 15) throw fail();
      r.num = std::stoll(std::string(a));
      r.den = std::stoll(std::string(b));
      if (r.den == 0) throw fail();
    } else {
      auto dot = text.find('.');
      auto whole = text.substr(0, dot);
      auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
      if (whole.empty()) whole = "0";
      if (!digits_only(whole) || (dot != std::string_view::npos && !frac.empty() && !digits_only(frac)) ||
          whole.size() + frac.size() > 15)
        throw fail();
      r.num = std::stoll(std::string(whole));
      for (char c : frac) {
        r.num = r.num * 10 + (c - '0');
        r.den *= 10;
      }
    }
    const std::int64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    return r;
  }

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Smallest integer N with N >= n^(1 + eps), computed exactly as N^den >= n^(den + num).
inline std::int64_t ceil_power(std::int64_t n, const Rational& eps) {
  if (n < 1) throw UsageError("n must be >= 1");
  using u128 = unsigned __int128;
  constexpr u128 kLimit = static_cast<u128>(1) << 126;
  auto sat_pow = [&](u128 base, std::int64_t e) -> std::optional<u128> {
    u128 acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
      if (base != 0 && acc > kLimit / base) return std::nullopt;
      acc *= base;
    }
    return acc;
  };
  const auto target = sat_pow(static_cast<u128>(n), eps.den + eps.num);
  if (!target) throw UsageError("n^(1+eps) is too large to bound exactly; use a simpler eps");
  const double guess = std::pow(static_cast<double>(n), 1.0 + eps.value());
  auto ge = [&](std::int64_t cand) {
    auto p = sat_pow(static_cast<u128>(cand), eps.den);
    return !p || *p >= *target;
  };
  std::int64_t N = std::max<std::int64_t>(1, static_cast<std::int64_t>(guess) - 2);
  while (ge(N) && N > 1) --N;
  while (!ge(N)) ++N;
  return N;
}

struct Construction1Params {
  IntSet S;  // aligned with directions: s_i pairs with direction i
  std::int64_t M = 0;
};

struct Construction2Params {
  IntSet S;
  std::int64_t N = 0;
  std::optional<Rational> eps;
};

using SchemeParams = std::variant<std::monostate, Construction1Params, Construction2Params>;

inline constexpr int kMaxMaterializedDim = 20;

/// Total map from the edges of Q_n to color pairs, plus the parameters that generated it.
class EdgeColoring {
 public:
  EdgeColoring(Dim n, int k, Scheme scheme, SchemeParams params, std::vector<ColorPair> colors)
      : n_(n), k_(k), scheme_(scheme), params_(std::move(params)), colors_(std::move(colors)) {
    if (colors_.size() != n.edge_count())
      throw UsageError("coloring is not total: " + std::to_string(colors_.size()) + " colors for " +
                       std::to_string(n.edge_count()) + " edges");
  }

  static EdgeColoring explicit_colors(Dim n, int k, std::vector<ColorPair> colors) {
    return EdgeColoring(n, k, Scheme::explicit_colors, std::monostate{}, std::move(colors));
  }

  static EdgeColoring uniform(Dim n, int k, ColorPair c) {
    return explicit_colors(n, k, std::vector<ColorPair>(n.edge_count(), c));
  }

  Dim dim() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Scheme scheme() const noexcept { return scheme_; }
  const SchemeParams& params() const noexcept { return params_; }
  const std::vector<ColorPair>& colors() const noexcept { return colors_; }

  const ColorPair& color(const Edge& e) const { return colors_[edge_index(n_, e)]; }

  /// Overrides one edge; the result is no longer recomputable, so it becomes explicit.
  void set_color(const Edge& e, ColorPair c) {
    colors_[edge_index(n_, e)] = c;
    scheme_ = Scheme::explicit_colors;
    params_ = std::monostate{};
  }

 private:
  Dim n_;
  int k_;
  Scheme scheme_;
  SchemeParams params_;
  std::vector<ColorPair> colors_;
};

inline void check_materializable(Dim n) {
  if (n.value() > kMaxMaterializedDim)
    throw BudgetError("materialized colorings support n <= " + std::to_string(kMaxMaterializedDim));
}

/// a(v): sum of s_i over the elements i of v.
inline std::int64_t weight_a(Dim n, Vertex v, const IntSet& S) {
  if (S.size() < static_cast<std::size_t>(n.value()))
    throw UsageError("set has " + std::to_string(S.size()) + " elements, need at least n = " +
                     std::to_string(n.value()));
  std::int64_t acc = 0;
  for (Mask m = v.bits; m; m &= m - 1) acc += S[static_cast<std::size_t>(std::countr_zero(m))];
  return acc;
}

inline ColorPair construction1_color(const Edge& e, int k, const Construction1Params& p, std::int64_t a) {
  return ColorPair{a + p.M * e.dir, edge_level(e) % (k / 2)};
}

inline ColorPair construction2_color(const Edge& e, const Construction2Params& p, std::int64_t a) {
  const std::int64_t mod = 2 * p.N;
  return ColorPair{(a + 2 * p.S[static_cast<std::size_t>(e.dir - 1)]) % mod, edge_level(e) % 3};
}

namespace detail {

// Colors every edge from a per-edge rule fn(edge, a(bottom)).
template <typename Fn>
std::vector<ColorPair> paint(Dim n, const IntSet& S, Fn&& fn) {
  check_materializable(n);
  std::vector<ColorPair> colors(n.edge_count());
  for_each_edge(n, [&](const Edge& e) { colors[edge_index(n, e)] = fn(e, weight_a(n, e.bottom, S)); });
  return colors;
}

}  // namespace detail

inline Construction1Params construction1_params(Dim n, int k, const IntSet& S) {
  if (k < 8 || k % 4 != 0) throw PreconditionError("construction 1 requires k = 0 (mod 4) and k >= 8");
  if (S.size() < static_cast<std::size_t>(n.value()))
    throw PreconditionError("construction 1 requires |S| >= n");
  const int t = k / 4 - 1;
  auto bt = verify_bt(S, std::max(t, 1));
  if (!bt.ok) throw PreconditionError("construction 1 requires S to be a B_" + std::to_string(t) + " set");
  Construction1Params p{S.prefix(static_cast<std::size_t>(n.value())), 0};
  p.M = (k / 4) * p.S.max() + 1;
  return p;
}

inline EdgeColoring construction1(Dim n, int k, const IntSet& S) {
  auto p = construction1_params(n, k, S);
  auto colors = detail::paint(n, p.S, [&](const Edge& e, std::int64_t a) { return construction1_color(e, k, p, a); });
  return EdgeColoring(n, k, Scheme::construction1, p, std::move(colors));
}

inline void check_construction2_params(Dim n, const IntSet& S, std::int64_t N) {
  if (S.size() < static_cast<std::size_t>(n.value()))
    throw PreconditionError("construction 2 requires |S| >= n");
  if (N < 1 || S.max() > N) throw PreconditionError("construction 2 requires max(S) <= N");
  if (!verify_3ap_free(S).ok) throw PreconditionError("construction 2 requires a progression-free S");
}

inline EdgeColoring construction2(Dim n, const IntSet& S, std::int64_t N, std::optional<Rational> eps = std::nullopt) {
  check_construction2_params(n, S, N);
  Construction2Params p{S.prefix(static_cast<std::size_t>(n.value())), N, eps};
  auto colors = detail::paint(n, p.S, [&](const Edge& e, std::int64_t a) { return construction2_color(e, p, a); });
  return EdgeColoring(n, 6, Scheme::construction2, p, std::move(colors));
}

/// N = ceil(n^(1+eps)) and the n smallest elements of behrend_set(N).
inline Construction2Params derive_c2_params(int n, const Rational& eps) {
  if (n < 1) throw UsageError("n must be >= 1");
  if (eps.num <= 0) throw UsageError("eps must be > 0");
  const std::int64_t N = ceil_power(n, eps);
  IntSet S = behrend_set(N);
  if (S.size() < static_cast<std::size_t>(n))
    throw InfeasibleError("only " + std::to_string(S.size()) + " progression-free elements found in [1, " +
                          std::to_string(N) + "], need " + std::to_string(n) + "; try a larger eps");
  return Construction2Params{S.prefix(static_cast<std::size_t>(n)), N, eps};
}

inline std::size_t count_colors(const EdgeColoring& c) {
  std::vector<ColorPair> sorted = c.colors();
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

/// Rebuilds a scheme coloring from its stored parameters.
inline EdgeColoring recompute(const EdgeColoring& c) {
  if (const auto* p1 = std::get_if<Construction1Params>(&c.params())) {
    auto colors = detail::paint(c.dim(), p1->S,
                                [&](const Edge& e, std::int64_t a) { return construction1_color(e, c.k(), *p1, a); });
    return EdgeColoring(c.dim(), c.k(), Scheme::construction1, *p1, std::move(colors));
  }
  if (const auto* p2 = std::get_if<Construction2Params>(&c.params())) {
    auto colors =
        detail::paint(c.dim(), p2->S, [&](const Edge& e, std::int64_t a) { return construction2_color(e, *p2, a); });
    return EdgeColoring(c.dim(), c.k(), Scheme::construction2, *p2, std::move(colors));
  }
  throw UsageError("explicit colorings carry no parameters to recompute from");
}

namespace detail {

// reach[r * width + a] marks subsets v of [n] \ {skip} with |v| = r (mod classes) and
// a(v) = a (mod `wrap` when wrap > 0).
inline std::vector<char> subset_sum_reach(const std::vector<std::int64_t>& s, int skip, int classes,
                                          std::int64_t width, std::int64_t wrap) {
  std::vector<char> reach(static_cast<std::size_t>(classes * width), 0), next;
  reach[0] = 1;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (i == skip) continue;
    next = reach;
    for (int r = 0; r < classes; ++r)
      for (std::int64_t a = 0; a < width; ++a) {
        if (!reach[static_cast<std::size_t>(r * width + a)]) continue;
        std::int64_t b = a + s[i];
        if (wrap > 0) b %= wrap;
        if (b >= width) continue;
        next[static_cast<std::size_t>(((r + 1) % classes) * width + b)] = 1;
      }
    reach.swap(next);
  }
  return reach;
}

}  // namespace detail

/// Distinct colors of construction 2 on Q_n without materializing edges (n may exceed 30).
inline std::size_t count_construction2_colors(int n, const IntSet& S, std::int64_t N) {
  if (n < 1 || static_cast<std::size_t>(n) > S.size()) throw UsageError("need 1 <= n <= |S|");
  if (N > 50'000'000) throw BudgetError("N too large for exact color counting");
  const std::int64_t mod = 2 * N;
  std::vector<std::int64_t> s(S.elems().begin(), S.elems().begin() + n);
  std::vector<char> seen(static_cast<std::size_t>(3 * mod), 0);
  for (int j = 0; j < n; ++j) {
    auto reach = detail::subset_sum_reach(s, j, 3, mod, mod);
    for (int r = 0; r < 3; ++r)
      for (std::int64_t a = 0; a < mod; ++a)
        if (reach[static_cast<std::size_t>(r * mod + a)])
          seen[static_cast<std::size_t>(((r + 1) % 3) * mod + (a + 2 * s[j]) % mod)] = 1;
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
}

/// Distinct colors of construction 1 on Q_n without materializing edges.
inline std::size_t count_construction1_colors(int n, int k, const IntSet& S, std::int64_t M) {
  if (n < 1 || static_cast<std::size_t>(n) > S.size()) throw UsageError("need 1 <= n <= |S|");
  const int h = k / 2;
  std::vector<std::int64_t> s(S.elems().begin(), S.elems().begin() + n);
  const std::int64_t total = std::accumulate(s.begin(), s.end(), std::int64_t{0});
  const std::int64_t max_d = total + M * n;
  if (static_cast<double>(max_d + 1) * h > 4e8) throw BudgetError("color range too large for exact counting");
  std::vector<char> seen(static_cast<std::size_t>((max_d + 1) * h), 0);
  for (int j = 0; j < n; ++j) {
    auto reach = detail::subset_sum_reach(s, j, h, total + 1, 0);
    for (int r = 0; r < h; ++r)
      for (std::int64_t a = 0; a <= total; ++a)
        if (reach[static_cast<std::size_t>(r * (total + 1) + a)])
          seen[static_cast<std::size_t>(((r + 1) % h) * (max_d + 1) + a + M * (j + 1))] = 1;
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
}

}  // namespace rainbow
