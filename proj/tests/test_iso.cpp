#include <doctest.h>

#include <chrono>

#include "gsn/canonical.hpp"
#include "gsn/catalog.hpp"
#include "gsn/generators.hpp"
#include "gsn/iso.hpp"
#include "gsn/random.hpp"
#include "oracles.hpp"

using namespace gsn;

namespace {

MatchOptions induced(bool yes) {
  MatchOptions o;
  o.induced = yes;
  return o;
}

// Connected graphs on up to five vertices, one per isomorphism class.
std::vector<Graph> small_patterns() {
  std::vector<Graph> out;
  for (int m = 1; m <= 5; ++m) {
    const Collection all = all_graphs_of_size(m);
    for (const auto& p : all.patterns()) {
      if (is_connected(p.graph)) out.push_back(p.graph);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("match counts on small examples") {
  CHECK(count_matches(complete_graph(3), complete_graph(4), induced(true)) == 24);
  CHECK(count_matches(path_graph(2), path_graph(3), induced(false)) == 4);
  CHECK(count_matches(path_graph(3), complete_graph(3), induced(false)) == 6);
  CHECK(count_distinct_subgraphs(cycle_graph(4), complete_graph(4), induced(true)) == 0);
  CHECK(count_distinct_subgraphs(cycle_graph(4), complete_graph(4), induced(false)) == 3);
  CHECK(count_distinct_subgraphs(complete_graph(3), cycle_graph(8), induced(false)) == 0);
  CHECK(count_matches(complete_graph(4), complete_graph(3), induced(false)) == 0);
}

TEST_CASE("matcher rejects empty and disconnected patterns") {
  CHECK_THROWS_AS(PatternMatcher(empty_graph(0), {}), GraphError);
  CHECK_THROWS_AS(PatternMatcher(empty_graph(2), {}), GraphError);
  MatchOptions o;
  o.allow_disconnected = true;
  CHECK(count_matches(empty_graph(2), empty_graph(3), o) == 6);
}

TEST_CASE("matcher equals brute-force injective maps") {
  const std::vector<Graph> patterns = small_patterns();
  Rng rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const Graph g = random_gnp(n, 0.25 + 0.5 * uniform01(rng), rng);
    for (const Graph& h : patterns) {
      for (bool ind : {true, false}) {
        CHECK(count_matches(h, g, induced(ind)) == oracle::count_injective_maps(h, g, ind));
      }
    }
  }
}

TEST_CASE("distinct subgraphs times |Aut| equals match count") {
  const std::vector<Graph> patterns = small_patterns();
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_gnp(9, 0.45, rng);
    for (const Graph& h : patterns) {
      const auto aut = compute_orbits(h).aut_size;
      for (bool ind : {true, false}) {
        CHECK(count_distinct_subgraphs(h, g, induced(ind)) * aut ==
              count_matches(h, g, induced(ind)));
      }
    }
  }
}

TEST_CASE("labelled matching respects vertex and edge labels") {
  const Graph h(2, {{0, 1}}, std::vector<int>{1, 2}, std::map<Edge, int>{{Edge(0, 1), 5}});
  const Graph g(3, {{0, 1}, {1, 2}}, std::vector<int>{1, 2, 1},
                std::map<Edge, int>{{Edge(0, 1), 5}, {Edge(1, 2), 4}});
  CHECK(count_matches(h, g, induced(true)) == 1);
}

TEST_CASE("deadline raises MatchTimeout") {
  MatchOptions o;
  o.induced = false;
  o.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(count_matches(cycle_graph(6), complete_graph(30), o), MatchTimeout);
}

TEST_CASE("orbits of named patterns") {
  const OrbitPartition c6 = compute_orbits(cycle_graph(6));
  CHECK(c6.aut_size == 12);
  CHECK(c6.num_vertex_orbits() == 1);
  CHECK(c6.num_edge_orbits() == 1);
  const OrbitPartition p3 = compute_orbits(path_graph(3));
  CHECK(p3.aut_size == 2);
  CHECK(p3.num_vertex_orbits() == 2);
  CHECK(p3.num_edge_orbits() == 1);
  CHECK(p3.vertex_orbit_of[0] == p3.vertex_orbit_of[2]);
  CHECK(p3.vertex_orbit_of[0] != p3.vertex_orbit_of[1]);
  CHECK_FALSE(p3.edge_orbit_reversible[0]);
  const OrbitPartition k4 = compute_orbits(complete_graph(4));
  CHECK(k4.aut_size == 24);
  CHECK(k4.num_vertex_orbits() == 1);
  CHECK(k4.num_edge_orbits() == 1);
  CHECK(k4.edge_orbit_reversible[0]);
  CHECK_THROWS_AS(compute_orbits(complete_graph(11)), GraphError);
}

TEST_CASE("orbits agree with brute-force automorphisms up to 8 vertices") {
  Rng rng(31);
  std::vector<Graph> graphs;
  for (int m = 2; m <= 6; ++m) {
    const Collection all = all_graphs_of_size(m);
    for (const auto& p : all.patterns()) {
      if (is_connected(p.graph)) graphs.push_back(p.graph);
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 7 + static_cast<int>(uniform_below(rng, 2));
    const Graph g = random_gnp(n, 0.4, rng);
    if (is_connected(g)) graphs.push_back(g);
  }
  graphs.push_back(cycle_graph(8));
  graphs.push_back(complete_graph(8));
  graphs.push_back(star_graph(7));
  for (const Graph& h : graphs) {
    const OrbitPartition o = compute_orbits(h);
    const auto auts = oracle::automorphisms(h);
    CHECK(o.aut_size == auts.size());
    std::vector<std::vector<int>> got;
    for (const auto& orbit : o.vertex_orbits) got.emplace_back(orbit.begin(), orbit.end());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::vertex_orbits(h));

    // every oracle arc orbit maps onto exactly one column (or onto -1 as the
    // reverse of a one-way orbit), and columns are distinct
    const int k = h.num_vertices();
    std::set<int> columns;
    std::size_t forward = 0;
    for (const auto& arcs : oracle::arc_orbits(h)) {
      std::set<int> cols;
      for (auto [a, b] : arcs) cols.insert(o.arc_orbit[a * k + b]);
      CHECK(cols.size() == 1);
      if (*cols.begin() >= 0) {
        CHECK(columns.insert(*cols.begin()).second);
        ++forward;
      }
    }
    CHECK(forward == static_cast<std::size_t>(o.num_edge_orbits()));
  }
}

TEST_CASE("canonical codes decide isomorphism") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 14));
    const Graph g = random_gnp(n, uniform01(rng), rng);
    const Graph h = g.permuted(random_permutation(n, rng));
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    CHECK(are_isomorphic(g, h));
  }
  CHECK(are_isomorphic(complete_graph(3), cycle_graph(3)));
  CHECK_FALSE(are_isomorphic(rook_graph(4), shrikhande_graph()));
  CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  CHECK(canonical_code(rook_graph(4)) != canonical_code(shrikhande_graph()));
}

TEST_CASE("are_isomorphic matches brute force on random small pairs") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 6));
    const double p = uniform01(rng);
    const Graph a = random_gnp(n, p, rng);
    const Graph b = random_gnp(n, p, rng);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("are_isomorphic is an equivalence relation") {
  Rng rng(47);
  std::vector<Graph> pool;
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_gnp(6, 0.5, rng);
    pool.push_back(g);
    pool.push_back(g.permuted(random_permutation(6, rng)));
  }
  for (const Graph& a : pool) CHECK(are_isomorphic(a, a));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      CHECK(are_isomorphic(pool[i], pool[j]) == are_isomorphic(pool[j], pool[i]));
    }
  }
  for (int t = 0; t < 2000; ++t) {
    const Graph& a = pool[uniform_below(rng, pool.size())];
    const Graph& b = pool[uniform_below(rng, pool.size())];
    const Graph& c = pool[uniform_below(rng, pool.size())];
    if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
  }
}

TEST_CASE("subgraph counts are invariant under relabelling") {
  Rng rng(53);
  const std::vector<Graph> patterns{cycle_graph(4), path_graph(4), complete_graph(3),
                                    star_graph(3)};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(uniform_below(rng, 5));
    const Graph g = random_gnp(n, 0.5, rng);
    const std::vector<Vertex> sigma = random_permutation(n, rng);
    const Graph h = g.permuted(sigma);
    for (const Graph& p : patterns) {
      CHECK(count_distinct_subgraphs(p, g, induced(true)) ==
            count_distinct_subgraphs(p, h, induced(true)));
      std::vector<int> part_g(n, 0), part_h(n, 0);
      PatternMatcher(p, induced(true)).for_each(g, [&](std::span<const Vertex> m) {
        for (Vertex v : m) ++part_g[v];
      });
      PatternMatcher(p, induced(true)).for_each(h, [&](std::span<const Vertex> m) {
        for (Vertex v : m) ++part_h[v];
      });
      for (Vertex v = 0; v < n; ++v) CHECK(part_g[v] == part_h[sigma[v]]);
    }
  }
}
