#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "rainbow/hypercube.hpp"

using namespace rainbow;

namespace {

// Test-only oracle: plain DFS over vertex sequences with no distance pruning, deduplicated
// by the sorted edge list of each cycle.
std::set<std::vector<std::pair<Mask, Mask>>> brute_cycles(int n, int k) {
  std::set<std::vector<std::pair<Mask, Mask>>> found;
  std::vector<Mask> path;
  auto dfs = [&](auto& self) -> void {
    if (static_cast<int>(path.size()) == k) {
      Mask diff = path.back() ^ path.front();
      if (std::popcount(diff) != 1) return;
      std::vector<std::pair<Mask, Mask>> es;
      for (int i = 0; i < k; ++i) {
        Mask a = path[i], b = path[(i + 1) % k];
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(es.begin(), es.end());
      found.insert(es);
      return;
    }
    for (int b = 0; b < n; ++b) {
      Mask u = path.back() ^ (Mask{1} << b);
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      path.push_back(u);
      self(self);
      path.pop_back();
    }
  };
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    path = {s};
    dfs(dfs);
  }
  return found;
}

}  // namespace

TEST_CASE("edge level is bottom size plus one") {
  CHECK(edge_level(Edge{Vertex{}, 3}) == 1);
  CHECK(edge_level(Edge{vertex_of({2, 5}), 1}) == 3);
  CHECK_THROWS_AS(edge_level(Edge{vertex_of({1}), 1}), StructuralError);
  CHECK_THROWS_AS(check_edge(Dim(3), Edge{vertex_of({4}), 1}), StructuralError);
  CHECK_THROWS_AS(check_edge(Dim(3), Edge{Vertex{}, 4}), StructuralError);
}

TEST_CASE("dimension bounds") {
  CHECK_THROWS_AS(Dim(0), UsageError);
  CHECK_THROWS_AS(Dim(31), UsageError);
  CHECK(Dim(30).edge_count() == 30ull << 29);
}

TEST_CASE("edge enumeration") {
  auto q1 = enumerate_edges(Dim(1));
  REQUIRE(q1.size() == 1);
  CHECK(q1[0] == Edge{Vertex{}, 1});
  CHECK(enumerate_edges(Dim(2)).size() == 4);
  CHECK(enumerate_edges(Dim(4)).size() == 32);

  auto q5 = enumerate_edges(Dim(5));
  CHECK(std::is_sorted(q5.begin(), q5.end()));
  CHECK(std::adjacent_find(q5.begin(), q5.end()) == q5.end());
}

TEST_CASE("edge index is a bijection onto [0, n 2^(n-1))") {
  for (int n = 1; n <= 8; ++n) {
    Dim d(n);
    std::vector<char> hit(d.edge_count(), 0);
    for_each_edge(d, [&](const Edge& e) {
      auto i = edge_index(d, e);
      REQUIRE(i < d.edge_count());
      CHECK(!hit[i]);
      hit[i] = 1;
      CHECK(edge_at(d, i) == e);
    });
  }
}

TEST_CASE("cycle enumeration small cases") {
  CHECK(enumerate_cycles(Dim(2), 4).size() == 1);
  CHECK(enumerate_cycles(Dim(3), 6).size() == 16);
  CHECK(enumerate_cycles(Dim(3), 5).empty());
  CHECK(enumerate_cycles(Dim(3), 4).size() == 6);
  CHECK(enumerate_cycles(Dim(4), 4).size() == 24);
  CHECK(enumerate_cycles(Dim(4), 8).size() == 696);
  CHECK_THROWS_AS(enumerate_cycles(Dim(2), 6), UsageError);
  CHECK_THROWS_AS(enumerate_cycles(Dim(3), 2), UsageError);
}

TEST_CASE("six-cycle count formula 16 C(n,3) 2^(n-3)") {
  for (int n = 3; n <= 5; ++n)
    CHECK(enumerate_cycles(Dim(n), 6).size() == 16 * binomial(n, 3) * (std::uint64_t{1} << (n - 3)));
}

TEST_CASE("enumerated cycles are valid, canonical, sorted and unique") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 4; k <= 8 && k <= (1 << n); k += 2) {
      auto cycles = enumerate_cycles(Dim(n), k);
      for (const auto& c : cycles) {
        INFO("n=" << n << " k=" << k);
        CHECK_FALSE(cycle_defect(Dim(n), c).has_value());
        CHECK(Cycle::canonical({c.vertices().begin(), c.vertices().end()}) == c);
      }
      CHECK(std::is_sorted(cycles.begin(), cycles.end()));
      CHECK(std::adjacent_find(cycles.begin(), cycles.end()) == cycles.end());
    }
}

TEST_CASE("cycle enumeration agrees with an unpruned brute-force oracle") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 4; k <= 8 && k <= (1 << n); k += 2) {
      auto oracle = brute_cycles(n, k);
      std::set<std::vector<std::pair<Mask, Mask>>> ours;
      for (const auto& c : enumerate_cycles(Dim(n), k)) {
        std::vector<std::pair<Mask, Mask>> es;
        for (const auto& e : c.edges()) es.emplace_back(e.bottom.bits, e.top().bits);
        std::sort(es.begin(), es.end());
        ours.insert(es);
      }
      INFO("n=" << n << " k=" << k);
      CHECK(ours == oracle);
    }
}

TEST_CASE("early stop") {
  int seen = 0;
  bool finished = for_each_cycle(Dim(4), 6, [&](std::span<const Vertex>) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("cycle defects are reported") {
  Dim n(3);
  CHECK(cycle_defect(n, Cycle::canonical({Vertex{0}, Vertex{1}, Vertex{3}})).has_value());
  CHECK(cycle_defect(n, Cycle::canonical({Vertex{0}, Vertex{1}, Vertex{3}, Vertex{7}})).has_value());
  CHECK_FALSE(cycle_defect(n, Cycle::canonical({Vertex{3}, Vertex{1}, Vertex{0}, Vertex{2}})).has_value());
}

TEST_CASE("cycles containing a pair") {
  Dim q3(3);
  auto w = cycles_containing_pair(q3, 6, Edge{Vertex{}, 1}, Edge{vertex_of({3}), 2});
  REQUIRE(w.has_value());
  CHECK_FALSE(cycle_defect(q3, *w).has_value());
  CHECK(w->contains(Edge{Vertex{}, 1}));
  CHECK(w->contains(Edge{vertex_of({3}), 2}));

  CHECK_FALSE(cycles_containing_pair(q3, 4, Edge{Vertex{}, 1}, Edge{vertex_of({1, 2}), 3}).has_value());
  CHECK_THROWS_AS(cycles_containing_pair(q3, 6, Edge{Vertex{}, 1}, Edge{Vertex{}, 1}), UsageError);
}

TEST_CASE("pair witness is the canonically smallest enumerated cycle") {
  for (int k : {4, 6}) {
    Dim n(4);
    auto cycles = enumerate_cycles(n, k);
    auto edges = enumerate_edges(n);
    for (std::size_t a = 0; a < edges.size(); ++a)
      for (std::size_t b = a + 1; b < edges.size(); b += 3) {
        std::optional<Cycle> expected;
        for (const auto& c : cycles)
          if (c.contains(edges[a]) && c.contains(edges[b])) {
            expected = c;
            break;
          }
        CHECK(cycles_containing_pair(n, k, edges[a], edges[b]) == expected);
      }
  }
}

TEST_CASE("same-level construction: shared bottom vertex") {
  auto c = build_cycle_same_level(Dim(7), 6, Edge{Vertex{}, 1}, Edge{Vertex{}, 2});
  std::vector<Vertex> expected{Vertex{}, vertex_of({1}), vertex_of({1, 3}), vertex_of({1, 2, 3}),
                               vertex_of({2, 3}), vertex_of({2})};
  CHECK(std::vector<Vertex>(c.vertices().begin(), c.vertices().end()) == expected);
}

TEST_CASE("same-level construction: shared top vertex") {
  Dim n(7);
  Edge e1{vertex_of({2}), 1}, e2{vertex_of({1}), 2};
  auto c = build_cycle_same_level(n, 6, e1, e2);
  CHECK_FALSE(cycle_defect(n, c).has_value());
  CHECK(c.contains(e1));
  CHECK(c.contains(e2));
  CHECK(c.length() == 6);
  CHECK(cycles_containing_pair(n, 6, e1, e2).has_value());
}

TEST_CASE("same-level construction preconditions") {
  CHECK_THROWS_AS(build_cycle_same_level(Dim(6), 6, Edge{Vertex{}, 1}, Edge{Vertex{}, 2}), PreconditionError);
  CHECK_THROWS_AS(build_cycle_same_level(Dim(7), 6, Edge{Vertex{}, 1}, Edge{vertex_of({1}), 2}), PreconditionError);
  CHECK_THROWS_AS(build_cycle_same_level(Dim(7), 6, Edge{Vertex{}, 1}, Edge{Vertex{}, 1}), PreconditionError);
  // Disjoint edges at distance 2 exceed k/2 - 2 = 1 for k = 6.
  CHECK_THROWS_AS(build_cycle_same_level(Dim(7), 6, Edge{vertex_of({1}), 3}, Edge{vertex_of({2}), 3}),
                  PreconditionError);
}

TEST_CASE("same-level construction is confirmed by search for every valid pair") {
  for (int n = 5; n <= 8; ++n)
    for (int k : {4, 6}) {
      if (n <= k) continue;
      Dim d(n);
      auto edges = enumerate_edges(d);
      std::size_t checked = 0;
      for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
          const Edge &e1 = edges[a], &e2 = edges[b];
          if (e1.bottom.size() != e2.bottom.size()) continue;
          const bool incident = e1.bottom == e2.bottom || e1.top() == e2.top();
          if (!incident && distance(e1.bottom, e2.bottom) > k / 2 - 2) continue;
          auto c = build_cycle_same_level(d, k, e1, e2);
          REQUIRE_FALSE(cycle_defect(d, c).has_value());
          REQUIRE(c.length() == static_cast<std::size_t>(k));
          REQUIRE(c.contains(e1));
          REQUIRE(c.contains(e2));
          if (n <= 7) REQUIRE(cycles_containing_pair(d, k, e1, e2).has_value());
          ++checked;
        }
      INFO("n=" << n << " k=" << k);
      CHECK(checked > 0);
    }
}

TEST_CASE("same-level construction for disjoint edges on random levels") {
  std::mt19937 rng(7);
  for (int k : {8, 10, 12}) {
    Dim n(k + 3);
    auto edges = enumerate_edges(n);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    int built = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      Edge e1 = edges[pick(rng)];
      // Same-level neighbour: swap up to (k/2 - 2)/2 elements of the bottom set.
      Mask b = e1.bottom.bits;
      const int swaps = std::uniform_int_distribution<int>(0, (k / 2 - 2) / 2)(rng);
      for (int s = 0; s < swaps; ++s) {
        auto in = detail::elements(b), out = detail::elements(n.full_mask() & ~b);
        if (in.empty() || out.empty()) break;
        b ^= Mask{1} << (in[rng() % in.size()] - 1);
        b ^= Mask{1} << (out[rng() % out.size()] - 1);
      }
      auto free_dirs = detail::elements(n.full_mask() & ~b);
      if (free_dirs.empty()) continue;
      Edge e2{Vertex{b}, free_dirs[rng() % free_dirs.size()]};
      if (e1 == e2 || e1.bottom.size() != e2.bottom.size()) continue;
      if (e1.bottom == e2.bottom || e1.top() == e2.top()) continue;
      if (distance(e1.bottom, e2.bottom) > k / 2 - 2) continue;
      Cycle c;
      try {
        c = build_cycle_same_level(n, k, e1, e2);
      } catch (const PreconditionError&) {
        continue;  // not enough room at the extreme levels
      }
      REQUIRE_FALSE(cycle_defect(n, c).has_value());
      REQUIRE(c.length() == static_cast<std::size_t>(k));
      REQUIRE(c.contains(e1));
      REQUIRE(c.contains(e2));
      ++built;
    }
    CHECK(built > 500);
  }
}

TEST_CASE("level edge counts") {
  CHECK(count_level_edges(Dim(7), 1) == 7);
  CHECK(count_level_edges(Dim(9), 2) == 72);
  CHECK_THROWS_AS(count_level_edges(Dim(4), 5), UsageError);
  CHECK_THROWS_AS(count_level_edges(Dim(4), 0), UsageError);
  for (int n = 1; n <= 8; ++n)
    for (int l = 1; l <= n; ++l) CHECK(level_edges(Dim(n), l).size() == count_level_edges(Dim(n), l));
}
