#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "gsn/catalog.hpp"
#include "gsn/graph.hpp"

namespace gsn {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Vertex counts (n x D) and directed edge counts (one row per arc of the
/// graph, in Graph::arc_index order, E columns).
///
/// Column k of the edge block belongs to an edge orbit with canonical
/// orientation (tail, head). Row (u, v) counts matched subgraphs whose
/// mapping sends u into the tail orbit and v into the head orbit along a
/// pattern edge of that orbit; for reversible orbits both arcs of a matched
/// edge are counted.
struct StructuralFeatures {
  CountMatrix vertex_counts;
  CountMatrix edge_counts;
  std::string collection;
  CountingMode mode = CountingMode::graphlet;

  auto edge(const Graph& g, Vertex u, Vertex v) const {
    return edge_counts.row(g.arc_index(u, v));
  }
};

struct FeatureOptions {
  bool vertices = true;
  bool edges = true;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

StructuralFeatures compute_features(const Graph& g, const Collection& c,
                                    const FeatureOptions& options = {});

inline CountMatrix vertex_features(const Graph& g, const Collection& c) {
  return compute_features(g, c, {true, false, std::nullopt}).vertex_counts;
}

inline CountMatrix edge_features(const Graph& g, const Collection& c) {
  return compute_features(g, c, {false, true, std::nullopt}).edge_counts;
}

/// Recovers vertex counts from directed edge counts: for every vertex orbit
/// i, the arcs leaving v that a pattern places on edges at orbit i add up to
/// deg(O_i) times x_i(v). Throws GraphError when a pattern has an isolated
/// vertex, or when a sum is not divisible (which would mean the edge counts
/// are inconsistent).
CountMatrix reconstruct_vertex_from_edge(const Graph& g, const Collection& c,
                                         const CountMatrix& edge_counts);

struct DeckEntry {
  std::string pattern;
  std::int64_t orbit_sum = 0;    // sum over v and orbits of x^V_{H_j}(v)
  std::int64_t deck_count = 0;   // D_j(G), copies of H_j in the deck
};

struct DeckReport {
  bool holds = true;
  int n = 0;
  std::vector<DeckEntry> entries;
};

/// Checks sum_v sum_i x^V_{H_j,i}(v) = (n-1) D_j(G) over all graphs H_j on
/// n-1 vertices. `all_graphs` may be passed to reuse a prebuilt collection.
DeckReport deck_check(const Graph& g, const Collection* all_graphs = nullptr);

/// Per-column sorted list of observed values, used for one-hot encoding.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::vector<std::int64_t>> values) : values_(std::move(values)) {}

  static Vocabulary build(const std::vector<const CountMatrix*>& data, int columns);

  int columns() const { return static_cast<int>(values_.size()); }
  const std::vector<std::int64_t>& values(int column) const { return values_[column]; }
  /// Sum of the per-column vocabulary sizes.
  int width() const;
  /// Index of `value` in column `column`; throws std::out_of_range naming
  /// the column and value when absent.
  int index(int column, std::int64_t value) const;

  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> encode(
      const CountMatrix& counts) const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Zero(
            counts.rows(), width());
    if (counts.cols() != columns()) {
      throw std::out_of_range("feature width " + std::to_string(counts.cols()) +
                              " does not match vocabulary width " + std::to_string(columns()));
    }
    for (Eigen::Index r = 0; r < counts.rows(); ++r) {
      int offset = 0;
      for (int c = 0; c < columns(); ++c) {
        out(r, offset + index(c, counts(r, c))) = Scalar(1);
        offset += static_cast<int>(values_[c].size());
      }
    }
    return out;
  }

  nlohmann::json to_json() const;
  static Vocabulary from_json(const nlohmann::json& j);

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::vector<std::int64_t>> values_;
};

/// u_G summed over graphs divided by total vertex count, where u_G is the
/// number of distinct (input label, vertex identifier) tuples in G.
double disambiguation_score(const std::vector<Graph>& graphs,
                            const std::vector<CountMatrix>& vertex_counts);

/// One row per vertex: graph_id, vertex_id, then D count columns.
void write_vertex_csv(std::ostream& out, const Collection& c, bool header,
                      const std::string& graph_id, const CountMatrix& vertex_counts);
/// One row per arc: graph_id, u, v, then E count columns.
void write_edge_csv(std::ostream& out, const Collection& c, bool header,
                    const std::string& graph_id, const Graph& g, const CountMatrix& edge_counts);
nlohmann::json features_to_json(const Graph& g, const StructuralFeatures& f);

/// Column labels such as "C6:o0" for vertex and "C6:e0" for edge features.
std::vector<std::string> vertex_column_names(const Collection& c);
std::vector<std::string> edge_column_names(const Collection& c);

}  // namespace gsn
