#include "gsn/iso.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "gsn/canonical.hpp"

namespace gsn {

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

PatternMatcher::PatternMatcher(const Graph& pattern, MatchOptions options)
    : pattern_(pattern), options_(std::move(options)) {
  const int k = pattern_.num_vertices();
  if (k == 0) throw GraphError("pattern must have at least one vertex");
  if (!options_.allow_disconnected && !is_connected(pattern_)) {
    throw GraphError("pattern is disconnected; set allow_disconnected to match it");
  }
  std::vector<int> position(k, -1);
  for (int depth = 0; depth < k; ++depth) {
    // Prefer vertices with the most already-placed neighbours, then higher
    // degree, then lower index.
    Vertex best = -1;
    std::tuple<int, int, int> best_key{-1, -1, 0};
    for (Vertex p = 0; p < k; ++p) {
      if (position[p] >= 0) continue;
      int placed = 0;
      for (Vertex q : pattern_.neighbors(p)) placed += position[q] >= 0;
      const std::tuple<int, int, int> key{placed, pattern_.degree(p), -p};
      if (best < 0 || key > best_key) {
        best = p;
        best_key = key;
      }
    }
    Step s;
    s.p = best;
    for (Vertex q = 0; q < k; ++q) {
      if (position[q] < 0) continue;
      if (pattern_.adjacent(best, q)) {
        s.linked.push_back(q);
        if (s.parent < 0 || position[q] < s.parent) s.parent = position[q];
      } else {
        s.unlinked.push_back(q);
      }
    }
    position[best] = depth;
    steps_.push_back(std::move(s));
  }
}

bool PatternMatcher::feasible(const Graph& target, const Step& s, Vertex c,
                              const std::vector<Vertex>& map) const {
  if (target.degree(c) < pattern_.degree(s.p)) return false;
  if (pattern_.has_vertex_labels() && pattern_.vertex_label(s.p) != target.vertex_label(c)) {
    return false;
  }
  for (Vertex q : s.linked) {
    if (!target.adjacent(c, map[q])) return false;
    if (pattern_.has_edge_labels() &&
        pattern_.edge_label(s.p, q) != target.edge_label(c, map[q])) {
      return false;
    }
  }
  if (options_.induced) {
    for (Vertex q : s.unlinked) {
      if (target.adjacent(c, map[q])) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> enumerate_matches(const Graph& h, const Graph& g,
                                                   const MatchOptions& options) {
  std::vector<std::vector<Vertex>> out;
  PatternMatcher(h, options).for_each(g, [&](std::span<const Vertex> m) {
    out.emplace_back(m.begin(), m.end());
  });
  return out;
}

std::uint64_t count_matches(const Graph& h, const Graph& g, const MatchOptions& options) {
  std::uint64_t count = 0;
  PatternMatcher(h, options).for_each(g, [&](std::span<const Vertex>) { ++count; });
  return count;
}

std::uint64_t count_distinct_subgraphs(const Graph& h, const Graph& g,
                                       const MatchOptions& options) {
  PatternMatcher matcher(h, options);
  std::set<std::vector<int>> seen;
  matcher.for_each(g, [&](std::span<const Vertex> m) {
    std::vector<int> key(m.begin(), m.end());
    std::sort(key.begin(), key.end());
    if (!options.induced) {
      // the vertex set alone does not fix a non-induced copy
      std::vector<std::pair<int, int>> pairs;
      for (const Edge& e : h.edges()) {
        const Edge image(m[e.u], m[e.v]);
        pairs.emplace_back(image.u, image.v);
      }
      std::sort(pairs.begin(), pairs.end());
      for (auto [u, v] : pairs) {
        key.push_back(u);
        key.push_back(v);
      }
    }
    seen.insert(std::move(key));
  });
  return seen.size();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (a.has_edge_labels() != b.has_edge_labels()) return false;
  std::vector<std::pair<int, int>> da, db;
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    da.emplace_back(a.degree(v), a.vertex_label(v));
    db.emplace_back(b.degree(v), b.vertex_label(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

OrbitPartition compute_orbits(const Graph& h, const OrbitOptions& options) {
  const int n = h.num_vertices();
  if (n > options.max_vertices) {
    throw GraphError("pattern has " + std::to_string(n) + " vertices, above the orbit cap of " +
                     std::to_string(options.max_vertices));
  }
  OrbitPartition out;
  MatchOptions mo;
  mo.induced = true;
  mo.allow_disconnected = options.allow_disconnected;

  // The orbit of v is {sigma(v)}, so its smallest member is a canonical
  // representative; likewise for arcs encoded as a * n + b. The group is
  // streamed rather than stored (stars and cliques have factorial order).
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::vector<int> arc_root(static_cast<std::size_t>(n) * n, -1);
  for (const Edge& e : h.edges()) {
    arc_root[e.u * n + e.v] = e.u * n + e.v;
    arc_root[e.v * n + e.u] = e.v * n + e.u;
  }
  PatternMatcher(h, mo).for_each(h, [&](std::span<const Vertex> sigma) {
    ++out.aut_size;
    for (Vertex v = 0; v < n; ++v) root[v] = std::min(root[v], sigma[v]);
    for (const Edge& e : h.edges()) {
      int& f = arc_root[e.u * n + e.v];
      f = std::min(f, sigma[e.u] * n + sigma[e.v]);
      int& r = arc_root[e.v * n + e.u];
      r = std::min(r, sigma[e.v] * n + sigma[e.u]);
    }
  });
  const std::vector<int> pos = canonical_form(h).position;
  std::vector<std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < n; ++v) {
    if (root[v] != v) continue;
    std::vector<Vertex> orbit;
    for (Vertex u = 0; u < n; ++u) {
      if (root[u] == v) orbit.push_back(u);
    }
    orbits.push_back(std::move(orbit));
  }
  auto min_pos = [&](const std::vector<Vertex>& orbit) {
    int m = n;
    for (Vertex v : orbit) m = std::min(m, pos[v]);
    return m;
  };
  std::sort(orbits.begin(), orbits.end(), [&](const auto& x, const auto& y) {
    return std::make_tuple(x.size(), h.degree(x[0]), min_pos(x)) <
           std::make_tuple(y.size(), h.degree(y[0]), min_pos(y));
  });
  out.vertex_orbit_of.assign(n, -1);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (Vertex v : orbits[i]) out.vertex_orbit_of[v] = static_cast<int>(i);
  }
  out.vertex_orbits = std::move(orbits);

  // An edge orbit is the union of an arc orbit and its reverse.
  struct Oriented {
    int tail_orbit, head_orbit, pos_a, pos_b;
    Vertex a, b;
    bool reversible;
    std::vector<Edge> edges;
  };
  std::vector<Oriented> found;
  std::set<Edge> assigned;
  for (const Edge& e : h.edges()) {
    if (assigned.count(e)) continue;
    const int fwd = arc_root[e.u * n + e.v];
    const int rev = arc_root[e.v * n + e.u];
    std::vector<Edge> members;
    for (const Edge& f : h.edges()) {
      const int r = arc_root[f.u * n + f.v];
      if (r == fwd || r == rev) members.push_back(f);
    }
    for (const Edge& f : members) assigned.insert(f);
    // Orientation: lowest (tail orbit, head orbit, canonical positions).
    Oriented best{};
    bool have = false;
    for (const Edge& f : members) {
      for (auto [a, b] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
        Oriented cand{out.vertex_orbit_of[a], out.vertex_orbit_of[b], pos[a], pos[b], a, b, fwd == rev, {}};
        if (!have || std::tie(cand.tail_orbit, cand.head_orbit, cand.pos_a, cand.pos_b) <
                         std::tie(best.tail_orbit, best.head_orbit, best.pos_a, best.pos_b)) {
          best = cand;
          have = true;
        }
      }
    }
    best.edges = std::move(members);
    found.push_back(std::move(best));
  }
  std::sort(found.begin(), found.end(), [](const Oriented& x, const Oriented& y) {
    return std::make_tuple(x.edges.size(), x.tail_orbit, x.head_orbit, x.pos_a, x.pos_b) <
           std::make_tuple(y.edges.size(), y.tail_orbit, y.head_orbit, y.pos_a, y.pos_b);
  });
  out.arc_orbit.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t k = 0; k < found.size(); ++k) {
    const int target = arc_root[found[k].a * n + found[k].b];
    for (const Edge& f : found[k].edges) {
      if (arc_root[f.u * n + f.v] == target) out.arc_orbit[f.u * n + f.v] = static_cast<int>(k);
      if (arc_root[f.v * n + f.u] == target) out.arc_orbit[f.v * n + f.u] = static_cast<int>(k);
    }
    out.edge_orbits.push_back(found[k].edges);
    out.edge_orbit_ends.emplace_back(found[k].tail_orbit, found[k].head_orbit);
    out.edge_orbit_reversible.push_back(found[k].reversible ? 1 : 0);
  }
  return out;
}

}  // namespace gsn
