#pragma once
// Ground-truth checks for C_k-rainbow colorings by exhaustive cycle enumeration.
//
// A cycle is rainbow iff its edges are pairwise differently colored, so a coloring is
// C_k-rainbow iff it properly colors the conflict graph: vertices are the edges of Q_n,
// adjacent when some C_k contains both. Exact minimum color counts are chromatic numbers
// of that graph.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/chromatic.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypercube.hpp"

namespace rainbow {

struct Violation {
  Cycle cycle;
  Edge e1;
  Edge e2;
  ColorPair color;
};

struct RainbowReport {
  std::optional<Violation> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// Scans every k-cycle in canonical order; reports the first non-rainbow cycle and its
/// first clashing edge pair (by position along the cycle).
inline RainbowReport verify_rainbow(const EdgeColoring& c, int k) {
  const Dim n = c.dim();
  if (k < 4 || k % 2 != 0) throw UsageError("k must be even and >= 4");
  RainbowReport report;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  const auto& colors = c.colors();
  for_each_cycle(n, k, [&](std::span<const Vertex> vs) {
    for (int i = 0; i < k; ++i) idx[i] = edge_index(n, edge_between(vs[i], vs[(i + 1) % k]));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (colors[idx[a]] == colors[idx[b]]) {
          report.violation = Violation{Cycle::canonical({vs.begin(), vs.end()}), edge_at(n, idx[a]),
                                       edge_at(n, idx[b]), colors[idx[a]]};
          return false;
        }
    return true;
  });
  return report;
}

inline constexpr int kMaxConflictDim = 10;

struct ConflictGraph {
  Dim n;
  int k;
  BitGraph graph;  // vertex i is the edge edge_at(n, i)
};

/// One pass over all k-cycles, joining every pair of edges that share a cycle.
inline ConflictGraph conflict_graph(Dim n, int k, Deadline deadline = std::nullopt) {
  if (n.value() > kMaxConflictDim)
    throw UsageError("conflict graphs are limited to n <= " + std::to_string(kMaxConflictDim));
  ConflictGraph cg{n, k, BitGraph(n.edge_count())};
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::uint64_t seen = 0;
  for_each_cycle(n, k, [&](std::span<const Vertex> vs) {
    if ((++seen & 4095) == 0 && expired(deadline)) throw BudgetError("conflict graph construction timed out");
    for (int i = 0; i < k; ++i) idx[i] = edge_index(n, edge_between(vs[i], vs[(i + 1) % k]));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) cg.graph.add_edge(idx[a], idx[b]);
    return true;
  });
  return cg;
}

/// Rainbow check through the conflict graph (independent of verify_rainbow's cycle scan).
inline bool properly_colors(const ConflictGraph& cg, const EdgeColoring& c) {
  const auto& colors = c.colors();
  for (std::size_t u = 0; u < cg.graph.size(); ++u)
    for (std::size_t v : cg.graph.neighbors(u))
      if (v > u && colors[u] == colors[v]) return false;
  return true;
}

struct ExactResult {
  int value = 0;
  EdgeColoring coloring;
};

/// Raised on timeout with certified bounds on f(n, k).
class ExactTimeout : public BudgetError {
 public:
  ExactTimeout(int lower, int upper)
      : BudgetError("exact search timed out; " + std::to_string(lower) + " <= f <= " + std::to_string(upper)),
        lower_(lower),
        upper_(upper) {}
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

/// f(n, k): the chromatic number of the conflict graph. The level-ceil(k/4) edges seed the
/// clique bound when they are pairwise in conflict.
inline ExactResult exact_min_colors(Dim n, int k, Deadline deadline = std::nullopt) {
  if (k < 4 || k % 2 != 0 || static_cast<std::uint64_t>(k) > n.vertex_count())
    throw UsageError("need even k with 4 <= k <= 2^n");
  // Q_n has cycles of every even length up to 2^n, so k colors are always needed; giving
  // every edge its own color always suffices.
  const int trivial_lower = k;
  const int trivial_upper = static_cast<int>(n.edge_count());

  std::optional<ConflictGraph> cg;
  try {
    cg = conflict_graph(n, k, deadline);
  } catch (const BudgetError&) {
    throw ExactTimeout(trivial_lower, trivial_upper);
  }

  std::vector<std::size_t> seed;
  const int level = (k + 3) / 4;
  if (level <= n.value()) {
    for (const Edge& e : level_edges(n, level)) seed.push_back(edge_index(n, e));
    if (!cg->graph.is_clique(seed)) seed.clear();
  }

  ChromaticResult res;
  try {
    res = chromatic_number(cg->graph, seed, deadline);
  } catch (const ChromaticTimeout& t) {
    throw ExactTimeout(std::max(trivial_lower, t.lower()), t.upper());
  }
  std::vector<ColorPair> colors(n.edge_count());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = ColorPair{res.assignment[i], 0};
  return ExactResult{res.colors, EdgeColoring::explicit_colors(n, k, std::move(colors))};
}

struct PairWitness {
  std::size_t first;   // indices into BoundCertificate::edges
  std::size_t second;
  Cycle cycle;
};

struct BoundCertificate {
  int level = 0;
  std::vector<Edge> edges;
  std::vector<PairWitness> pair_witnesses;
};

struct LowerBound {
  std::uint64_t value = 0;
  BoundCertificate certificate;
};

/// Every pair of level-k/4 edges lies on a common C_k, so all of them need distinct colors.
/// Witnesses come from build_cycle_same_level, with search as a fallback; each is validated.
inline LowerBound lower_bound_clique(Dim n, int k) {
  if (k < 4 || k % 4 != 0) throw PreconditionError("lower bound certificate requires k = 0 (mod 4)");
  if (n.value() <= k) throw PreconditionError("lower bound certificate requires n > k");
  LowerBound out;
  auto& cert = out.certificate;
  cert.level = k / 4;
  cert.edges = level_edges(n, cert.level);
  if (cert.edges.size() != count_level_edges(n, cert.level)) throw InternalError("level edge count mismatch");
  cert.pair_witnesses.reserve(cert.edges.size() * (cert.edges.size() - 1) / 2);
  for (std::size_t a = 0; a < cert.edges.size(); ++a)
    for (std::size_t b = a + 1; b < cert.edges.size(); ++b) {
      const Edge& e1 = cert.edges[a];
      const Edge& e2 = cert.edges[b];
      std::optional<Cycle> w;
      try {
        w = build_cycle_same_level(n, k, e1, e2);
      } catch (const PreconditionError&) {
        w = cycles_containing_pair(n, k, e1, e2);
      }
      if (!w) throw InternalError("no C_k through two level-k/4 edges; the clique bound fails");
      if (auto defect = cycle_defect(n, *w)) throw InternalError("invalid witness: " + *defect);
      if (!w->contains(e1) || !w->contains(e2) || w->length() != static_cast<std::size_t>(k))
        throw InternalError("witness cycle misses an edge");
      cert.pair_witnesses.push_back({a, b, std::move(*w)});
    }
  out.value = cert.edges.size();
  return out;
}

/// Re-checks a certificate from scratch.
inline bool certificate_valid(Dim n, int k, const BoundCertificate& cert) {
  const std::size_t m = cert.edges.size();
  if (cert.pair_witnesses.size() != m * (m - 1) / 2) return false;
  for (const Edge& e : cert.edges)
    if (e.bottom.size() + 1 != cert.level) return false;
  for (const auto& pw : cert.pair_witnesses) {
    if (pw.first >= m || pw.second >= m || pw.first == pw.second) return false;
    if (cycle_defect(n, pw.cycle) || pw.cycle.length() != static_cast<std::size_t>(k)) return false;
    if (!pw.cycle.contains(cert.edges[pw.first]) || !pw.cycle.contains(cert.edges[pw.second])) return false;
  }
  return true;
}

struct Q3Equivalence {
  bool c6_rainbow = false;
  bool q3_rainbow = false;
};

/// Every 3-dimensional subcube carries 12 distinct colors.
inline bool all_q3_rainbow(const EdgeColoring& c) {
  const Dim n = c.dim();
  const int nv = n.value();
  for (int d1 = 1; d1 <= nv; ++d1)
    for (int d2 = d1 + 1; d2 <= nv; ++d2)
      for (int d3 = d2 + 1; d3 <= nv; ++d3) {
        const Mask dirs = (Mask{1} << (d1 - 1)) | (Mask{1} << (d2 - 1)) | (Mask{1} << (d3 - 1));
        const int ds[3] = {d1, d2, d3};
        for (Mask base = 0; base <= n.full_mask(); ++base) {
          if (base & dirs) continue;
          std::vector<ColorPair> cols;
          cols.reserve(12);
          for (Mask sub = 0; sub < 8; ++sub) {
            Mask v = base;
            for (int b = 0; b < 3; ++b)
              if ((sub >> b) & 1u) v |= Mask{1} << (ds[b] - 1);
            for (int b = 0; b < 3; ++b)
              if (!((sub >> b) & 1u)) cols.push_back(c.color(Edge{Vertex{v}, ds[b]}));
          }
          std::sort(cols.begin(), cols.end());
          if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
        }
      }
  return true;
}

/// Every C_6 rainbow <=> every Q_3 rainbow; both sides are computed independently and a
/// disagreement is raised as an InternalError.
inline Q3Equivalence verify_q3_equivalence(const EdgeColoring& c) {
  if (c.dim().value() < 3) throw UsageError("Q_3 equivalence needs n >= 3");
  Q3Equivalence out{verify_rainbow(c, 6).ok(), all_q3_rainbow(c)};
  if (out.c6_rainbow != out.q3_rainbow)
    throw InternalError("C_6-rainbow and Q_3-rainbow disagree on this coloring");
  return out;
}

}  // namespace rainbow
