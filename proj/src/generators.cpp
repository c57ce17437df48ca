#include "gsn/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>

namespace gsn {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

}  // namespace

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges), std::nullopt, std::nullopt, "K" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges), std::nullopt, std::nullopt, "C" + std::to_string(n));
}

Graph path_graph(int n) {
  EdgeList edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges), std::nullopt, std::nullopt, "P" + std::to_string(n));
}

Graph star_graph(int leaves) {
  EdgeList edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges), std::nullopt, std::nullopt,
               "S" + std::to_string(leaves));
}

Graph rook_graph(int m) {
  EdgeList edges;
  for (int a = 0; a < m * m; ++a) {
    for (int b = a + 1; b < m * m; ++b) {
      if (a / m == b / m || a % m == b % m) edges.emplace_back(a, b);
    }
  }
  return Graph(m * m, std::move(edges), std::nullopt, std::nullopt,
               "rook" + std::to_string(m) + "x" + std::to_string(m));
}

Graph shrikhande_graph() {
  EdgeList edges;
  auto diff_ok = [](int dr, int dc) {
    dr = (dr + 4) % 4;
    dc = (dc + 4) % 4;
    return (dr == 0 && (dc == 1 || dc == 3)) || (dc == 0 && (dr == 1 || dr == 3)) ||
           (dr == 1 && dc == 1) || (dr == 3 && dc == 3);
  };
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (diff_ok(a / 4 - b / 4, a % 4 - b % 4)) edges.emplace_back(a, b);
    }
  }
  return Graph(16, std::move(edges), std::nullopt, std::nullopt, "shrikhande");
}

Graph decalin_graph() {
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                    {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}};
  return Graph(10, std::move(edges), std::nullopt, std::nullopt, "decalin");
}

Graph bicyclopentyl_graph() {
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {0, 5}};
  return Graph(10, std::move(edges), std::nullopt, std::nullopt, "bicyclopentyl");
}

Graph complement(const Graph& g) {
  EdgeList edges;
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges), g.vertex_labels());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges;
  const int shift = a.num_vertices();
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

Graph random_gnp(int n, double p, Rng& rng) {
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_gnm(int n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = n < 2 ? 0 : std::uint64_t(n) * (n - 1) / 2;
  m = std::min<std::uint64_t>(m, pairs);
  // Floyd's sampling of m pair indices
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  EdgeList edges;
  for (std::uint64_t idx : chosen) {
    // row u holds pairs (u, u+1..n-1)
    Vertex u = 0;
    std::uint64_t rest = idx;
    while (rest >= std::uint64_t(n - 1 - u)) {
      rest -= n - 1 - u;
      ++u;
    }
    edges.emplace_back(u, u + 1 + static_cast<Vertex>(rest));
  }
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, Rng& rng) {
  if (n <= 1) return Graph(n, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(uniform_below(rng, n));
  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  EdgeList edges;
  for (int x : prufer) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, std::move(edges));
}

}  // namespace gsn
