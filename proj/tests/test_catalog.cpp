#include <doctest.h>

#include "gsn/catalog.hpp"
#include "gsn/generators.hpp"
#include "gsn/iso.hpp"
#include "oracles.hpp"

using namespace gsn;

namespace {

// Isomorphism classes of all labelled graphs on m vertices, deduplicated
// with the brute-force isomorphism oracle.
std::size_t brute_class_count(int m) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < m; ++v) {
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  std::vector<Graph> reps;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    const Graph g(m, edges);
    bool seen = false;
    for (const Graph& r : reps) {
      if (oracle::isomorphic(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

// Trees up to isomorphism from all Pruefer sequences.
std::size_t brute_tree_count(int m) {
  if (m <= 2) return 1;
  std::vector<Graph> reps;
  std::vector<int> seq(m - 2, 0);
  while (true) {
    std::vector<int> deg(m, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    int a = -1;
    for (int v = 0; v < m; ++v) {
      if (deg[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.emplace_back(a, v);
        }
      }
    }
    const Graph t(m, edges);
    bool seen = false;
    for (const Graph& r : reps) {
      seen = seen || (degree_sequence(r) == degree_sequence(t) && oracle::isomorphic(r, t));
    }
    if (!seen) reps.push_back(t);
    int i = m - 3;
    while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return reps.size();
}

void check_pairwise_non_isomorphic(const Collection& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      CHECK_FALSE(are_isomorphic(c.patterns()[i].graph, c.patterns()[j].graph));
    }
  }
}

}  // namespace

TEST_CASE("family collection sizes") {
  for (int k = 3; k <= 8; ++k) {
    CHECK(family_collection(Family::cycle, k, CountingMode::graphlet).size() == std::size_t(k - 2));
    CHECK(family_collection(Family::clique, k, CountingMode::graphlet).size() == std::size_t(k - 2));
    CHECK(family_collection(Family::path, k, CountingMode::graphlet).size() == std::size_t(k - 1));
  }
  const Collection cycles = family_collection(Family::cycle, 6, CountingMode::graphlet);
  CHECK(cycles.vertex_dims() == 4);
  CHECK(cycles.edge_dims() == 4);
  CHECK(family_collection(Family::clique, 5, CountingMode::graphlet).vertex_dims() == 3);
  CHECK(cycles.description() == "cycle<=6/graphlet");
  CHECK_THROWS(family_collection(Family::cycle, 11, CountingMode::graphlet));
  CHECK_THROWS(parse_family("hexagon"));
  CHECK_THROWS(parse_counting_mode("induced-ish"));
}

TEST_CASE("trees up to five vertices") {
  const Collection trees = family_collection(Family::tree, 5, CountingMode::motif);
  // P2; P3; P4, S3; P5, spider, S4
  CHECK(trees.size() == 7);
  std::vector<int> per_size(6, 0);
  for (const auto& p : trees.patterns()) ++per_size[p.size];
  CHECK(per_size == std::vector<int>{0, 0, 1, 1, 2, 3});
  check_pairwise_non_isomorphic(trees);
}

TEST_CASE("tree enumeration matches Pruefer brute force") {
  for (int m = 2; m <= 7; ++m) CHECK(nonisomorphic_trees(m).size() == brute_tree_count(m));
  const std::vector<std::size_t> known{1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int m = 2; m <= 12; ++m) CHECK(nonisomorphic_trees(m).size() == known[m - 2]);
}

TEST_CASE("all graphs of a given size") {
  const std::vector<std::size_t> known{1, 2, 4, 11, 34, 156, 1044};
  for (int m = 1; m <= 7; ++m) CHECK(all_graphs_of_size(m).size() == known[m - 1]);
  for (int m = 1; m <= 5; ++m) CHECK(all_graphs_of_size(m).size() == brute_class_count(m));
  check_pairwise_non_isomorphic(all_graphs_of_size(5));
  CHECK_THROWS(all_graphs_of_size(8));
}

TEST_CASE("collections reject isomorphic patterns") {
  std::vector<SubstructurePattern> ps{make_pattern(cycle_graph(3), Family::custom),
                                      make_pattern(complete_graph(3), Family::custom)};
  CHECK_THROWS(Collection(ps, CountingMode::graphlet));
}

TEST_CASE("families are pairwise non-isomorphic") {
  for (Family f : {Family::cycle, Family::path, Family::clique, Family::star, Family::tree}) {
    check_pairwise_non_isomorphic(family_collection(f, 6, CountingMode::motif));
  }
}

TEST_CASE("collection JSON round trip") {
  const Collection c = concat({family_collection(Family::path, 4, CountingMode::motif),
                               family_collection(Family::cycle, 5, CountingMode::motif)});
  const Collection back = collection_from_json(collection_to_json(c));
  REQUIRE(back.size() == c.size());
  CHECK(back.mode() == c.mode());
  CHECK(back.vertex_dims() == c.vertex_dims());
  CHECK(back.edge_dims() == c.edge_dims());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.patterns()[i].graph == c.patterns()[i].graph);
    CHECK(back.patterns()[i].orbits.vertex_orbits == c.patterns()[i].orbits.vertex_orbits);
  }
}
