#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gsn {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are sorted. Small graphs (n <= kDenseLimit) also keep a
/// dense bit matrix so that adjacency queries in the matcher are O(1).
class Graph {
 public:
  static constexpr int kDenseLimit = 4096;

  Graph() = default;

  /// Throws GraphError on self-loops, duplicate edges, out-of-range
  /// endpoints or a label vector of the wrong length.
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
        std::optional<std::vector<int>> vertex_labels = std::nullopt,
        std::optional<std::map<Edge, int>> edge_labels = std::nullopt,
        std::string name = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex a, Vertex b) const;

  /// Position of the directed pair (a, b) in the CSR arc array, or -1 when
  /// a and b are not adjacent. Arcs are ordered by (a, b).
  std::ptrdiff_t arc_index(Vertex a, Vertex b) const;
  std::size_t num_arcs() const { return adj_.size(); }
  /// Source vertex of every arc, parallel to the CSR arc array.
  std::vector<Vertex> arc_sources() const;

  bool has_vertex_labels() const { return vertex_labels_.has_value(); }
  const std::optional<std::vector<int>>& vertex_labels() const { return vertex_labels_; }
  /// Label of v, 0 when the graph is unlabelled.
  int vertex_label(Vertex v) const { return vertex_labels_ ? (*vertex_labels_)[v] : 0; }

  bool has_edge_labels() const { return edge_labels_.has_value(); }
  const std::optional<std::map<Edge, int>>& edge_labels() const { return edge_labels_; }
  /// Label of the edge {a, b}, 0 when the graph has no edge labels.
  int edge_label(Vertex a, Vertex b) const;

  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  /// Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
  Graph permuted(std::span<const Vertex> perm) const;

  /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
  Graph induced_subgraph(std::span<const Vertex> keep) const;

  /// Structural equality: same n, edges and labels (names ignored).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> dense_;
  int words_ = 0;
  std::optional<std::vector<int>> vertex_labels_;
  std::optional<std::map<Edge, int>> edge_labels_;
  std::string name_;
};

struct SRParameters {
  int n = 0;
  int d = 0;
  int lambda = 0;
  int mu = 0;

  friend auto operator<=>(const SRParameters&, const SRParameters&) = default;
};

/// Dense adjacency matrix with entries in {0, 1}.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = Scalar(1);
    a(e.v, e.u) = Scalar(1);
  }
  return a;
}

/// (n, d, lambda, mu) when g is strongly regular, otherwise empty. Regular
/// graphs that are complete or edgeless have an undefined mu or lambda and
/// report the unused one as 0.
std::optional<SRParameters> check_strongly_regular(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

}  // namespace gsn
