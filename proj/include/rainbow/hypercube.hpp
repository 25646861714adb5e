#pragma once
// Bitmask model of the n-cube Q_n.
//
// Vertices are subsets of [n] stored as incidence masks (bit i-1 <-> element i).
// Directions are 1-based everywhere so that direction j is the element j of [n].
// An edge is stored by its bottom vertex and the direction flipped to reach the top.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

inline constexpr int kMaxDim = 30;

using Mask = std::uint32_t;

/// Number of cube dimensions, 1 <= n <= 30.
class Dim {
 public:
  explicit Dim(int n) : n_(n) {
    if (n < 1 || n > kMaxDim)
      throw UsageError("dimension must be in 1.." + std::to_string(kMaxDim) + ", got " +
                       std::to_string(n));
  }

  int value() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const noexcept {
    return static_cast<std::uint64_t>(n_) << (n_ - 1);
  }
  Mask full_mask() const noexcept { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  friend bool operator==(Dim, Dim) = default;

 private:
  int n_;
};

struct Vertex {
  Mask bits = 0;

  int size() const noexcept { return std::popcount(bits); }
  bool has(int dir) const noexcept { return (bits >> (dir - 1)) & 1u; }
  Vertex flipped(int dir) const noexcept { return Vertex{bits ^ (Mask{1} << (dir - 1))}; }

  friend auto operator<=>(Vertex, Vertex) = default;
};

inline Vertex vertex_of(std::initializer_list<int> elements) {
  Vertex v;
  for (int e : elements) v.bits |= Mask{1} << (e - 1);
  return v;
}

inline int distance(Vertex a, Vertex b) noexcept { return std::popcount(a.bits ^ b.bits); }

struct Edge {
  Vertex bottom;
  int dir = 1;

  Vertex top() const noexcept { return bottom.flipped(dir); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws StructuralError unless `e` is an edge of Q_n.
inline void check_edge(Dim n, const Edge& e) {
  if (e.dir < 1 || e.dir > n.value())
    throw StructuralError("edge direction " + std::to_string(e.dir) + " outside 1.." +
                          std::to_string(n.value()));
  if (e.bottom.bits & ~n.full_mask())
    throw StructuralError("bottom vertex has bits above dimension " + std::to_string(n.value()));
  if (e.bottom.has(e.dir))
    throw StructuralError("direction " + std::to_string(e.dir) + " already set in bottom vertex");
}

/// Level of an edge: |bottom| + 1.
inline int edge_level(const Edge& e) {
  if (e.dir < 1 || e.dir > kMaxDim) throw StructuralError("edge direction out of range");
  if (e.bottom.has(e.dir)) throw StructuralError("direction bit already set in bottom vertex");
  return e.bottom.size() + 1;
}

/// The edge joining two adjacent vertices.
inline Edge edge_between(Vertex a, Vertex b) {
  Mask diff = a.bits ^ b.bits;
  if (std::popcount(diff) != 1) throw StructuralError("vertices are not adjacent");
  return Edge{Vertex{a.bits & b.bits}, std::countr_zero(diff) + 1};
}

/// Dense index in [0, n*2^(n-1)): direction-major, bottom with the direction bit squeezed out.
inline std::size_t edge_index(Dim n, const Edge& e) noexcept {
  Mask low = e.bottom.bits & ((Mask{1} << (e.dir - 1)) - 1);
  Mask high = (e.bottom.bits >> e.dir) << (e.dir - 1);
  return (static_cast<std::size_t>(e.dir - 1) << (n.value() - 1)) | (low | high);
}

inline Edge edge_at(Dim n, std::size_t index) noexcept {
  int dir = static_cast<int>(index >> (n.value() - 1)) + 1;
  Mask squeezed = static_cast<Mask>(index & ((std::size_t{1} << (n.value() - 1)) - 1));
  Mask low = squeezed & ((Mask{1} << (dir - 1)) - 1);
  Mask high = (squeezed >> (dir - 1)) << dir;
  return Edge{Vertex{low | high}, dir};
}

/// Visits every edge once: bottom ascending, then direction ascending.
template <typename Fn>
void for_each_edge(Dim n, Fn&& fn) {
  const Mask last = n.full_mask();
  for (Mask b = 0;; ++b) {
    for (int d = 1; d <= n.value(); ++d)
      if (!((b >> (d - 1)) & 1u)) fn(Edge{Vertex{b}, d});
    if (b == last) break;
  }
}

inline std::vector<Edge> enumerate_edges(Dim n) {
  std::vector<Edge> out;
  out.reserve(n.edge_count());
  for_each_edge(n, [&](const Edge& e) { out.push_back(e); });
  return out;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * static_cast<std::uint64_t>(n - r + i) / i;
  return acc;
}

/// Number of edges on level l: C(n, l-1) * (n - l + 1).
inline std::uint64_t count_level_edges(Dim n, int level) {
  if (level < 1 || level > n.value())
    throw UsageError("level must be in 1.." + std::to_string(n.value()));
  return binomial(n.value(), level - 1) * static_cast<std::uint64_t>(n.value() - level + 1);
}

inline std::vector<Edge> level_edges(Dim n, int level) {
  std::vector<Edge> out;
  for_each_edge(n, [&](const Edge& e) {
    if (e.bottom.size() + 1 == level) out.push_back(e);
  });
  return out;
}

/// A k-cycle of Q_n in canonical form: minimum vertex first, second vertex smaller than the last.
class Cycle {
 public:
  Cycle() = default;

  /// Canonicalizes an arbitrary closed walk listing (first vertex not repeated at the end).
  static Cycle canonical(std::vector<Vertex> verts) {
    Cycle c;
    if (verts.empty()) return c;
    auto it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), it, verts.end());
    if (verts.size() > 2 && verts.back() < verts[1]) std::reverse(verts.begin() + 1, verts.end());
    c.verts_ = std::move(verts);
    return c;
  }

  std::span<const Vertex> vertices() const noexcept { return verts_; }
  std::size_t length() const noexcept { return verts_.size(); }

  /// Edges in traversal order; edge i joins vertex i and vertex i+1 (cyclically).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i)
      out.push_back(edge_between(verts_[i], verts_[(i + 1) % verts_.size()]));
    return out;
  }

  bool contains(const Edge& e) const {
    const Vertex top = e.top();
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      Vertex a = verts_[i], b = verts_[(i + 1) % verts_.size()];
      if ((a == e.bottom && b == top) || (b == e.bottom && a == top)) return true;
    }
    return false;
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> verts_;
};

/// Returns a description of the first violated Cycle invariant, or nullopt when valid.
inline std::optional<std::string> cycle_defect(Dim n, const Cycle& c) {
  auto vs = c.vertices();
  const std::size_t k = vs.size();
  if (k < 4 || k % 2 != 0) return "cycle length " + std::to_string(k) + " is not an even number >= 4";
  std::vector<int> dir_uses(n.value() + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (vs[i].bits & ~n.full_mask()) return "vertex has bits above the dimension";
    Mask diff = vs[i].bits ^ vs[(i + 1) % k].bits;
    if (std::popcount(diff) != 1) return "consecutive vertices " + std::to_string(i) + " are not adjacent";
    ++dir_uses[std::countr_zero(diff) + 1];
  }
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
  for (int d = 1; d <= n.value(); ++d)
    if (dir_uses[d] % 2 != 0) return "direction " + std::to_string(d) + " used an odd number of times";
  if (vs[0] != sorted[0]) return "not rotated to its minimum vertex";
  if (!(vs[1] < vs[k - 1])) return "not in canonical orientation";
  return std::nullopt;
}

namespace detail {

// Neighbors of v in ascending numeric order: clears (highest bit first), then sets (lowest first).
inline int sorted_neighbors(Dim n, Vertex v, Vertex* out) {
  int count = 0;
  for (int b = n.value() - 1; b >= 0; --b)
    if ((v.bits >> b) & 1u) out[count++] = Vertex{v.bits ^ (Mask{1} << b)};
  for (int b = 0; b < n.value(); ++b)
    if (!((v.bits >> b) & 1u)) out[count++] = Vertex{v.bits | (Mask{1} << b)};
  return count;
}

inline bool on_path(std::span<const Vertex> path, Vertex u) {
  return std::find(path.begin(), path.end(), u) != path.end();
}

inline void check_cycle_length(Dim n, int k) {
  if (k < 4 || static_cast<std::uint64_t>(k) > n.vertex_count())
    throw UsageError("cycle length must satisfy 4 <= k <= 2^n, got k=" + std::to_string(k));
}

}  // namespace detail

/// Calls fn(span<const Vertex>) for every k-cycle of Q_n, each once, in canonical form and in
/// increasing lexicographic order of the vertex sequence. fn returns false to stop early.
/// Returns false iff stopped early. Odd k yields nothing.
template <typename Fn>
bool for_each_cycle(Dim n, int k, Fn&& fn) {
  detail::check_cycle_length(n, k);
  if (k % 2 != 0) return true;

  std::vector<Vertex> path(static_cast<std::size_t>(k));
  std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(k), std::vector<Vertex>(n.value()));
  const Mask last = n.full_mask();

  // Recursion depth is k; each frame owns its neighbor buffer.
  auto extend = [&](auto& self, int depth) -> bool {
    const Vertex cur = path[depth];
    const Vertex start = path[0];
    if (depth == k - 1) {
      if (distance(cur, start) == 1 && path[1] < cur)
        return fn(std::span<const Vertex>(path.data(), path.size()));
      return true;
    }
    const int remaining = k - depth - 1;
    Vertex* buf = nbrs[depth].data();
    const int cnt = detail::sorted_neighbors(n, cur, buf);
    for (int i = 0; i < cnt; ++i) {
      const Vertex u = buf[i];
      if (u <= start || distance(u, start) > remaining) continue;
      if (detail::on_path(std::span<const Vertex>(path.data() + 1, depth), u)) continue;
      path[depth + 1] = u;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };

  for (Mask s = 0;; ++s) {
    path[0] = Vertex{s};
    if (!extend(extend, 0)) return false;
    if (s == last) break;
  }
  return true;
}

inline std::vector<Cycle> enumerate_cycles(Dim n, int k) {
  std::vector<Cycle> out;
  for_each_cycle(n, k, [&](std::span<const Vertex> vs) {
    out.push_back(Cycle::canonical({vs.begin(), vs.end()}));
    return true;
  });
  return out;
}

/// Canonically smallest k-cycle containing both edges, or nullopt if none exists.
inline std::optional<Cycle> cycles_containing_pair(Dim n, int k, const Edge& e1, const Edge& e2) {
  check_edge(n, e1);
  check_edge(n, e2);
  if (e1 == e2) throw UsageError("cycles_containing_pair needs two distinct edges");
  detail::check_cycle_length(n, k);
  if (k % 2 != 0) return std::nullopt;

  const Vertex start = e1.bottom;
  const Vertex a2 = e2.bottom, b2 = e2.top();
  std::vector<Vertex> path(static_cast<std::size_t>(k));
  std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(k), std::vector<Vertex>(n.value()));
  std::optional<Cycle> best;

  auto is_e2 = [&](Vertex x, Vertex y) { return (x == a2 && y == b2) || (x == b2 && y == a2); };
  auto cost_to_use_e2 = [&](Vertex cur) {
    return std::min(distance(cur, a2) + 1 + distance(b2, start),
                    distance(cur, b2) + 1 + distance(a2, start));
  };

  // path[0] = bottom, path[1] = top is fixed, so every cycle through e1 is met exactly once.
  auto extend = [&](auto& self, int depth, bool used) -> void {
    const Vertex cur = path[depth];
    if (depth == k - 1) {
      if (distance(cur, start) == 1 && (used || is_e2(cur, start))) {
        Cycle c = Cycle::canonical(path);
        if (!best || c < *best) best = std::move(c);
      }
      return;
    }
    const int remaining = k - depth - 1;
    Vertex* buf = nbrs[depth].data();
    const int cnt = detail::sorted_neighbors(n, cur, buf);
    for (int i = 0; i < cnt; ++i) {
      const Vertex u = buf[i];
      if (u == start || distance(u, start) > remaining) continue;
      if (detail::on_path(std::span<const Vertex>(path.data(), depth + 1), u)) continue;
      const bool now_used = used || is_e2(cur, u);
      if (!now_used && cost_to_use_e2(u) > remaining) continue;
      path[depth + 1] = u;
      self(self, depth + 1, now_used);
    }
  };

  path[0] = e1.bottom;
  path[1] = e1.top();
  extend(extend, 1, is_e2(path[0], path[1]));
  return best;
}

namespace detail {

// Elements (1-based) of a mask in ascending order.
inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Walks from `from`, flipping each listed direction in order, appending every new vertex.
inline Vertex walk(std::vector<Vertex>& out, Vertex from, const std::vector<int>& dirs) {
  for (int d : dirs) {
    from = from.flipped(d);
    out.push_back(from);
  }
  return from;
}

// The first `count` directions, preferring those outside `avoid_first`, never touching `forbid`.
inline std::vector<int> pick_toggles(Dim n, Mask avoid_first, Mask forbid, int count) {
  std::vector<int> out;
  for (int pass = 0; pass < 2 && static_cast<int>(out.size()) < count; ++pass)
    for (int d = 1; d <= n.value() && static_cast<int>(out.size()) < count; ++d) {
      Mask bit = Mask{1} << (d - 1);
      if (forbid & bit) continue;
      if (((avoid_first & bit) != 0) == (pass == 0)) continue;
      out.push_back(d);
    }
  if (static_cast<int>(out.size()) < count)
    throw PreconditionError("not enough free coordinates to route the cycle");
  return out;
}

}  // namespace detail

/// Builds a k-cycle through two distinct edges on the same level, following the three
/// explicit routings: shared bottom vertex, shared top vertex, and vertex-disjoint edges.
/// Fresh coordinates are the smallest indices outside the union of the top vertices.
inline Cycle build_cycle_same_level(Dim n, int k, const Edge& e1, const Edge& e2) {
  check_edge(n, e1);
  check_edge(n, e2);
  if (k < 4 || k % 2 != 0) throw PreconditionError("k must be even and >= 4");
  if (n.value() <= k) throw PreconditionError("requires n > k");
  if (e1 == e2) throw PreconditionError("edges must be distinct");
  if (edge_level(e1) != edge_level(e2)) throw PreconditionError("edges must lie on the same level");

  const Vertex v = e1.bottom, w = e1.top(), x = e2.bottom, y = e2.top();
  const int i = e1.dir, j = e2.dir;
  std::vector<Vertex> verts;
  verts.reserve(static_cast<std::size_t>(k));

  if (v == x) {
    // v, v+i, v+i+s_1, ..., v+i+S, v+i+j+S, v+j+S, ..., v+j
    const int r = k / 2 - 2;
    const Mask ij = (Mask{1} << (i - 1)) | (Mask{1} << (j - 1));
    auto s = detail::pick_toggles(n, w.bits | y.bits, ij, r);
    verts.push_back(v);
    Vertex left = detail::walk(verts, v, {i});
    left = detail::walk(verts, left, s);
    verts.push_back(left.flipped(j));
    std::vector<Vertex> right{v.flipped(j)};
    detail::walk(right, v.flipped(j), s);
    verts.insert(verts.end(), right.rbegin(), right.rend());
  } else if (w == y) {
    const int r = k / 2 - 2;
    if (r == 0) {
      verts = {w, x, Vertex{x.bits & v.bits}, v};
    } else {
      // w, x, x+s_1, ..., x+S, w+S, v+S, ..., v+s_1, v
      const Mask ij = (Mask{1} << (i - 1)) | (Mask{1} << (j - 1));
      auto s = detail::pick_toggles(n, w.bits, ij, r);
      verts.push_back(w);
      verts.push_back(x);
      Vertex far = detail::walk(verts, x, s);
      verts.push_back(far.flipped(j));
      std::vector<Vertex> right{v};
      detail::walk(right, v, s);
      verts.insert(verts.end(), right.rbegin(), right.rend());
    }
  } else {
    const int d_low = distance(v, x);
    if (d_low > k / 2 - 2)
      throw PreconditionError("disjoint edges need |v xor x| <= k/2 - 2");
    const int d_up = distance(w, y);
    const int total_pad = (k - 2 - d_low - d_up) / 2;
    if (total_pad < 0) throw PreconditionError("edges too far apart for a k-cycle");

    const Mask common = v.bits & x.bits;
    const int cap_low = std::popcount(common);
    const int cap_up = n.value() - std::popcount(w.bits | y.bits);
    const int low_target = ((k / 2 - 2) / 2) * 2;
    int pad_low = std::min(cap_low, std::max(0, (low_target - d_low) / 2));
    int pad_up = total_pad - pad_low;
    if (pad_up > cap_up) {
      pad_low = std::min(cap_low, total_pad - cap_up);
      pad_up = total_pad - pad_low;
    }
    if (pad_up > cap_up) throw PreconditionError("not enough free coordinates to route the cycle");

    // Lower v,x-path stays at or below level |v|: delete v-x, delete padding from v&x,
    // add x-v, restore the padding.
    auto common_elems = detail::elements(common);
    std::vector<int> z(common_elems.begin(), common_elems.begin() + pad_low);
    std::vector<Vertex> lower{v};
    Vertex cur = detail::walk(lower, v, detail::elements(v.bits & ~x.bits));
    cur = detail::walk(lower, cur, z);
    cur = detail::walk(lower, cur, detail::elements(x.bits & ~v.bits));
    detail::walk(lower, cur, z);

    // Upper w,y-path stays at or above level |w|: add fresh coordinates, add y-w,
    // delete w-y, drop the fresh coordinates.
    auto fresh = detail::pick_toggles(n, w.bits | y.bits, w.bits | y.bits, pad_up);
    std::vector<Vertex> upper{w};
    cur = detail::walk(upper, w, fresh);
    cur = detail::walk(upper, cur, detail::elements(y.bits & ~w.bits));
    cur = detail::walk(upper, cur, detail::elements(w.bits & ~y.bits));
    detail::walk(upper, cur, fresh);

    verts = std::move(lower);
    verts.insert(verts.end(), upper.rbegin(), upper.rend());
  }

  Cycle c = Cycle::canonical(std::move(verts));
  if (auto defect = cycle_defect(n, c))
    throw InternalError("constructed cycle is invalid: " + *defect);
  if (c.length() != static_cast<std::size_t>(k) || !c.contains(e1) || !c.contains(e2))
    throw InternalError("constructed cycle misses a required edge");
  return c;
}

}  // namespace rainbow
