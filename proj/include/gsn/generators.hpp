#pragma once

#include "gsn/graph.hpp"
#include "gsn/random.hpp"

namespace gsn {

Graph empty_graph(int n);
Graph complete_graph(int n);
/// Cycle C_n, n >= 3.
Graph cycle_graph(int n);
/// Path on n vertices (n - 1 edges).
Graph path_graph(int n);
/// Star K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(int leaves);

/// m x m rook's graph: cells sharing a row or a column are adjacent.
Graph rook_graph(int m);
/// Shrikhande graph, Cayley graph of Z4 x Z4 with connection set
/// {+-(0,1), +-(1,0), +-(1,1)}.
Graph shrikhande_graph();

/// Carbon skeleton of decalin: two hexagons sharing an edge.
Graph decalin_graph();
/// Carbon skeleton of bicyclopentyl: two pentagons joined by a bridge.
Graph bicyclopentyl_graph();

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, Rng& rng);
/// Uniform simple graph with exactly m edges (m clamped to n(n-1)/2).
Graph random_gnm(int n, std::size_t m, Rng& rng);
/// Uniform labelled tree on n vertices via a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);

}  // namespace gsn
