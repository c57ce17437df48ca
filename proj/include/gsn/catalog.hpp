#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gsn/graph.hpp"
#include "gsn/iso.hpp"

namespace gsn {

enum class Family { cycle, path, clique, tree, star, custom, all_graphs };

/// graphlet = induced matching, motif = non-induced matching.
enum class CountingMode { graphlet, motif };

Family parse_family(std::string_view name);
std::string to_string(Family f);
CountingMode parse_counting_mode(std::string_view name);
std::string to_string(CountingMode m);

struct SubstructurePattern {
  Graph graph;
  OrbitPartition orbits;
  Family family = Family::custom;
  int size = 0;
};

class Collection {
 public:
  Collection() = default;
  /// Throws GraphError if two patterns are isomorphic.
  Collection(std::vector<SubstructurePattern> patterns, CountingMode mode,
             bool allow_disconnected = false);

  const std::vector<SubstructurePattern>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  CountingMode mode() const { return mode_; }
  bool allow_disconnected() const { return allow_disconnected_; }
  MatchOptions match_options() const;

  /// D: total number of vertex orbits.
  int vertex_dims() const { return vertex_offsets_.back(); }
  int edge_dims() const { return edge_offsets_.back(); }
  /// First feature column of pattern i.
  int vertex_offset(std::size_t i) const { return vertex_offsets_[i]; }
  int edge_offset(std::size_t i) const { return edge_offsets_[i]; }

  /// Short description such as "cycle<=6/graphlet".
  const std::string& description() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  std::vector<SubstructurePattern> patterns_;
  CountingMode mode_ = CountingMode::graphlet;
  bool allow_disconnected_ = false;
  std::vector<int> vertex_offsets_{0};
  std::vector<int> edge_offsets_{0};
  std::string description_;
};

struct CatalogLimits {
  int max_tree_size = 12;
  int max_other_size = 10;
};

SubstructurePattern make_pattern(const Graph& h, Family family, bool allow_disconnected = false);

/// Every family member of size 3..k (cycles, cliques) or 2..k (paths, stars,
/// trees), ordered by size and then canonical code.
Collection family_collection(Family family, int k_max, CountingMode mode,
                             const CatalogLimits& limits = {});

/// All pairwise non-isomorphic graphs with m vertices (1 <= m <= 7),
/// including disconnected ones.
Collection all_graphs_of_size(int m);

/// Non-isomorphic trees with exactly m vertices, by leaf extension.
std::vector<Graph> nonisomorphic_trees(int m);

/// Union of several collections; they must share a counting mode.
Collection concat(const std::vector<Collection>& parts);

nlohmann::json collection_to_json(const Collection& c);
Collection collection_from_json(const nlohmann::json& j);

}  // namespace gsn
