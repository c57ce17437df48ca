#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gsn/graph.hpp"

namespace gsn {

struct MatchOptions {
  /// Induced (graphlet) matching also requires non-edges to be preserved.
  bool induced = true;
  /// Disconnected patterns are rejected unless this is set.
  bool allow_disconnected = false;
  /// Enumeration throws MatchTimeout once this instant has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class MatchTimeout : public std::runtime_error {
 public:
  MatchTimeout() : std::runtime_error("subgraph enumeration timed out") {}
};

/// Backtracking subgraph matcher for a fixed pattern.
///
/// Pattern vertices are visited in a connectivity-first order that starts
/// from the highest-degree vertex and always extends along an already
/// matched neighbour, so candidates come from one neighbour list. Vertex
/// and edge labels of the pattern are respected when the pattern has them.
class PatternMatcher {
 public:
  PatternMatcher(const Graph& pattern, MatchOptions options);

  const Graph& pattern() const { return pattern_; }
  const MatchOptions& options() const { return options_; }

  /// Calls visit(mapping) for every match; mapping[p] is the image of
  /// pattern vertex p. The span is only valid during the call.
  template <typename Visit>
  void for_each(const Graph& target, Visit&& visit) const {
    const int k = pattern_.num_vertices();
    if (k > target.num_vertices()) return;
    std::vector<Vertex> map(k, -1);
    std::vector<char> used(target.num_vertices(), 0);
    std::uint64_t ticks = 0;
    extend(target, 0, map, used, ticks, visit);
  }

 private:
  struct Step {
    Vertex p = 0;
    int parent = -1;               // position of an earlier adjacent pattern vertex
    std::vector<Vertex> linked;    // earlier pattern vertices adjacent to p
    std::vector<Vertex> unlinked;  // earlier pattern vertices not adjacent to p
  };

  bool feasible(const Graph& target, const Step& s, Vertex c,
                const std::vector<Vertex>& map) const;

  template <typename Visit>
  void extend(const Graph& target, std::size_t depth, std::vector<Vertex>& map,
              std::vector<char>& used, std::uint64_t& ticks, Visit& visit) const {
    if (depth == steps_.size()) {
      visit(std::span<const Vertex>(map));
      return;
    }
    if (options_.deadline && (++ticks & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw MatchTimeout();
    }
    const Step& s = steps_[depth];
    auto attempt = [&](Vertex c) {
      if (used[c] || !feasible(target, s, c, map)) return;
      map[s.p] = c;
      used[c] = 1;
      extend(target, depth + 1, map, used, ticks, visit);
      used[c] = 0;
      map[s.p] = -1;
    };
    if (s.parent >= 0) {
      for (Vertex c : target.neighbors(map[steps_[s.parent].p])) attempt(c);
    } else {
      for (Vertex c = 0; c < target.num_vertices(); ++c) attempt(c);
    }
  }

  Graph pattern_;
  MatchOptions options_;
  std::vector<Step> steps_;
};

/// All matches of H in G, each as a vector indexed by pattern vertex.
std::vector<std::vector<Vertex>> enumerate_matches(const Graph& h, const Graph& g,
                                                   const MatchOptions& options = {});

/// Number of matches, which is |Aut(H)| times the number of distinct subgraphs.
std::uint64_t count_matches(const Graph& h, const Graph& g, const MatchOptions& options = {});

/// Number of distinct subgraphs of G isomorphic to H: matches deduplicated by
/// image vertex set (induced) or image edge set (non-induced).
std::uint64_t count_distinct_subgraphs(const Graph& h, const Graph& g,
                                       const MatchOptions& options = {});

/// Isomorphism respecting vertex labels and edge labels.
bool are_isomorphic(const Graph& a, const Graph& b);

struct OrbitPartition {
  /// Vertex orbits in canonical order; members ascending.
  std::vector<std::vector<Vertex>> vertex_orbits;
  std::vector<int> vertex_orbit_of;
  /// Orbits of unordered edges under the induced action, canonical order.
  std::vector<std::vector<Edge>> edge_orbits;
  /// Canonical orientation of each edge orbit as (tail orbit, head orbit).
  /// Directed edge counts follow this orientation.
  std::vector<std::pair<int, int>> edge_orbit_ends;
  /// True when some automorphism reverses an edge of the orbit, so both
  /// directions of a matched edge fall into the orbit.
  std::vector<char> edge_orbit_reversible;
  /// arc_orbit[a * n + b] = k when the arc (a, b) lies in the oriented orbit
  /// k, and -1 otherwise (not an edge, or the reverse of a one-way orbit).
  std::vector<int> arc_orbit;
  std::uint64_t aut_size = 0;

  int num_vertex_orbits() const { return static_cast<int>(vertex_orbits.size()); }
  int num_edge_orbits() const { return static_cast<int>(edge_orbits.size()); }
};

struct OrbitOptions {
  int max_vertices = 10;
  bool allow_disconnected = false;
};

/// Automorphism group of H by self-matching, with vertex and edge orbits.
OrbitPartition compute_orbits(const Graph& h, const OrbitOptions& options = {});

bool is_connected(const Graph& g);

}  // namespace gsn
