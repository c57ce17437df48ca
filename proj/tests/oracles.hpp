#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsn/graph.hpp"

namespace oracle {

using gsn::Graph;
using gsn::Vertex;

using Adj = std::vector<std::vector<char>>;

inline Adj adjacency(const Graph& g) {
  const int n = g.num_vertices();
  Adj a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls f(map) for every injective map from k points into 0..n-1.
template <typename F>
void for_each_injection(int k, int n, F&& f) {
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto& self, int i) -> void {
    if (i == k) {
      f(map);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      map[i] = c;
      self(self, i + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
}

/// Pattern edges present (and, when induced, non-edges absent) under map.
inline bool is_embedding(const Adj& h, const Adj& g, const std::vector<int>& map, bool induced) {
  const int k = static_cast<int>(h.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const bool he = h[a][b], ge = g[map[a]][map[b]];
      if (he && !ge) return false;
      if (induced && !he && ge) return false;
    }
  }
  return true;
}

inline std::uint64_t count_injective_maps(const Graph& h, const Graph& g, bool induced) {
  const Adj ha = adjacency(h), ga = adjacency(g);
  std::uint64_t count = 0;
  for_each_injection(h.num_vertices(), g.num_vertices(), [&](const std::vector<int>& m) {
    count += is_embedding(ha, ga, m, induced);
  });
  return count;
}

/// All automorphisms of h by trying every permutation.
inline std::vector<std::vector<int>> automorphisms(const Graph& h) {
  const Adj a = adjacency(h);
  const int k = h.num_vertices();
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < k && ok; ++u) {
      if (h.vertex_label(u) != h.vertex_label(p[u])) ok = false;
      for (int v = 0; v < k && ok; ++v) {
        if (a[u][v] != a[p[u]][p[v]]) ok = false;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Vertex orbits as a sorted list of sorted classes.
inline std::vector<std::vector<int>> vertex_orbits(const Graph& h) {
  const auto auts = automorphisms(h);
  std::set<std::vector<int>> orbits;
  for (int v = 0; v < h.num_vertices(); ++v) {
    std::set<int> o;
    for (const auto& p : auts) o.insert(p[v]);
    orbits.emplace(o.begin(), o.end());
  }
  return {orbits.begin(), orbits.end()};
}

/// Orbits of Aut(h) on ordered adjacent pairs, each as a sorted set of arcs.
inline std::vector<std::set<std::pair<int, int>>> arc_orbits(const Graph& h) {
  const auto auts = automorphisms(h);
  std::set<std::set<std::pair<int, int>>> orbits;
  for (const auto& e : h.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      std::set<std::pair<int, int>> o;
      for (const auto& p : auts) o.emplace(p[a], p[b]);
      orbits.insert(o);
    }
  }
  return {orbits.begin(), orbits.end()};
}

/// Brute isomorphism test by trying every bijection (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const Adj x = adjacency(a), y = adjacency(b);
  const int n = a.num_vertices();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (a.vertex_label(u) != b.vertex_label(p[u])) ok = false;
      for (int v = u + 1; v < n && ok; ++v) {
        if (x[u][v] != y[p[u]][p[v]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// One copy of H in G: the vertex images and the set of image edges.
struct Occurrence {
  std::vector<int> map;  // some embedding realising it
  std::set<std::pair<int, int>> edges;
};

/// Distinct subgraphs of g isomorphic to h, found by trying every
/// injection and keeping one embedding per distinct image edge set (and
/// vertex set, for patterns with isolated vertices).
inline std::vector<Occurrence> occurrences(const Graph& h, const Graph& g, bool induced) {
  const Adj ha = adjacency(h), ga = adjacency(g);
  std::map<std::pair<std::vector<int>, std::set<std::pair<int, int>>>, std::vector<int>> seen;
  for_each_injection(h.num_vertices(), g.num_vertices(), [&](const std::vector<int>& m) {
    if (!is_embedding(ha, ga, m, induced)) return;
    std::set<std::pair<int, int>> edges;
    for (const auto& e : h.edges()) {
      edges.emplace(std::min(m[e.u], m[e.v]), std::max(m[e.u], m[e.v]));
    }
    std::vector<int> verts(m);
    std::sort(verts.begin(), verts.end());
    seen.emplace(std::make_pair(verts, edges), m);
  });
  std::vector<Occurrence> out;
  for (auto& [key, m] : seen) out.push_back({m, key.second});
  return out;
}

/// Per-vertex count of occurrences placing the vertex in each orbit, using
/// brute-force orbits. Result[v][o] with orbits ordered as vertex_orbits(h).
inline std::vector<std::vector<std::int64_t>> vertex_orbit_counts(const Graph& h, const Graph& g,
                                                                  bool induced) {
  const auto orbits = vertex_orbits(h);
  std::vector<int> orbit_of(h.num_vertices());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (int v : orbits[o]) orbit_of[v] = static_cast<int>(o);
  }
  std::vector<std::vector<std::int64_t>> out(g.num_vertices(),
                                             std::vector<std::int64_t>(orbits.size(), 0));
  for (const auto& occ : occurrences(h, g, induced)) {
    for (int a = 0; a < h.num_vertices(); ++a) ++out[occ.map[a]][orbit_of[a]];
  }
  return out;
}

/// Per-arc count of occurrences placing the arc (u, v) on a pattern arc of
/// each arc orbit. Result maps (u, v) to counts ordered as arc_orbits(h).
inline std::map<std::pair<int, int>, std::vector<std::int64_t>> arc_orbit_counts(
    const Graph& h, const Graph& g, bool induced) {
  const auto orbits = arc_orbits(h);
  std::map<std::pair<int, int>, int> orbit_of;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (const auto& arc : orbits[o]) orbit_of[arc] = static_cast<int>(o);
  }
  std::map<std::pair<int, int>, std::vector<std::int64_t>> out;
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v : g.neighbors(u)) out[{u, v}].assign(orbits.size(), 0);
  }
  for (const auto& occ : occurrences(h, g, induced)) {
    for (const auto& [arc, o] : orbit_of) ++out[{occ.map[arc.first], occ.map[arc.second]}][o];
  }
  return out;
}

/// Strong regularity by a direct triple loop.
struct SRG {
  int n, d, lambda, mu;
};

inline std::optional<SRG> strongly_regular(const Graph& g) {
  const int n = g.num_vertices();
  const Adj a = adjacency(g);
  int d = -1, lam = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    int deg = 0;
    for (int v = 0; v < n; ++v) deg += a[u][v];
    if (d >= 0 && deg != d) return std::nullopt;
    d = deg;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w = 0; w < n; ++w) common += a[u][w] && a[v][w];
      int& slot = a[u][v] ? lam : mu;
      if (slot >= 0 && slot != common) return std::nullopt;
      slot = common;
    }
  }
  return SRG{n, d, std::max(lam, 0), std::max(mu, 0)};
}

/// Reference graph6 decoder for n <= 62.
inline std::pair<int, std::set<std::pair<int, int>>> decode_graph6(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  std::set<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits[k]) edges.emplace(i, j);
    }
  }
  return {n, edges};
}

/// Plain 1-WL with string signatures; returns the stable vertex partition
/// as canonical class ids (first-occurrence order).
inline std::vector<int> wl1_partition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::string> sig(n);
  for (int v = 0; v < n; ++v) sig[v] = std::to_string(g.vertex_label(v));
  auto classes = [&](const std::vector<std::string>& s) {
    std::map<std::string, int> id;
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = id.emplace(s[v], static_cast<int>(id.size())).first->second;
    return out;
  };
  std::vector<int> cls = classes(sig);
  for (int round = 0; round < n; ++round) {
    std::vector<std::string> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(cls[u]);
      std::sort(nb.begin(), nb.end());
      next[v] = std::to_string(cls[v]) + "|";
      for (int c : nb) next[v] += std::to_string(c) + ",";
    }
    std::vector<int> ncls = classes(next);
    if (std::set<int>(ncls.begin(), ncls.end()).size() == std::set<int>(cls.begin(), cls.end()).size()) {
      break;
    }
    cls = ncls;
  }
  return cls;
}

/// True when partitions p and q (class id per element) group elements the
/// same way.
inline bool same_partition(const std::vector<int>& p, const std::vector<int>& q) {
  if (p.size() != q.size()) return false;
  std::map<int, int> fwd, back;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (fwd.emplace(p[i], q[i]).first->second != q[i]) return false;
    if (back.emplace(q[i], p[i]).first->second != p[i]) return false;
  }
  return true;
}

}  // namespace oracle
