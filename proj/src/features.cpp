#include "gsn/features.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gsn/iso.hpp"

namespace gsn {

namespace {

std::string pattern_name(const SubstructurePattern& p, std::size_t i) {
  return p.graph.name().empty() ? "H" + std::to_string(i) : p.graph.name();
}

}  // namespace

StructuralFeatures compute_features(const Graph& g, const Collection& c,
                                    const FeatureOptions& options) {
  StructuralFeatures f;
  f.collection = c.description();
  f.mode = c.mode();
  const int n = g.num_vertices();
  f.vertex_counts = CountMatrix::Zero(options.vertices ? n : 0, c.vertex_dims());
  f.edge_counts = CountMatrix::Zero(options.edges ? static_cast<Eigen::Index>(g.num_arcs()) : 0,
                                    c.edge_dims());
  MatchOptions mo = c.match_options();
  mo.deadline = options.deadline;

  for (std::size_t i = 0; i < c.size(); ++i) {
    const SubstructurePattern& p = c.patterns()[i];
    const int k = p.size;
    const int v_off = c.vertex_offset(i);
    const int e_off = c.edge_offset(i);
    const auto& orbit_of = p.orbits.vertex_orbit_of;
    std::vector<std::tuple<Vertex, Vertex, int>> arcs;
    for (Vertex a = 0; a < k; ++a) {
      for (Vertex b : p.graph.neighbors(a)) {
        const int orbit = p.orbits.arc_orbit[a * k + b];
        if (orbit >= 0) arcs.emplace_back(a, b, e_off + orbit);
      }
    }
    // Every distinct subgraph is reached by exactly |Aut(H)| mappings and
    // all of them assign each vertex (and arc) the same orbit, so summing
    // over all mappings and dividing by |Aut(H)| counts each subgraph once.
    PatternMatcher(p.graph, mo).for_each(g, [&](std::span<const Vertex> m) {
      if (options.vertices) {
        for (Vertex a = 0; a < k; ++a) ++f.vertex_counts(m[a], v_off + orbit_of[a]);
      }
      if (options.edges) {
        for (const auto& [a, b, col] : arcs) ++f.edge_counts(g.arc_index(m[a], m[b]), col);
      }
    });
    const auto aut = static_cast<std::int64_t>(p.orbits.aut_size);
    auto divide = [&](CountMatrix& mat, int off, int width) {
      auto block = mat.middleCols(off, width);
      if ((block.array() - (block.array() / aut) * aut).any()) {
        throw std::logic_error("orbit counts not divisible by |Aut(H)| for " + pattern_name(p, i));
      }
      block /= aut;
    };
    if (options.vertices) divide(f.vertex_counts, v_off, p.orbits.num_vertex_orbits());
    if (options.edges) divide(f.edge_counts, e_off, p.orbits.num_edge_orbits());
  }
  return f;
}

CountMatrix reconstruct_vertex_from_edge(const Graph& g, const Collection& c,
                                         const CountMatrix& edge_counts) {
  const int n = g.num_vertices();
  CountMatrix sums = CountMatrix::Zero(n, c.vertex_dims());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const SubstructurePattern& p = c.patterns()[i];
    const OrbitPartition& o = p.orbits;
    for (int orbit = 0; orbit < o.num_vertex_orbits(); ++orbit) {
      if (p.graph.degree(o.vertex_orbits[orbit][0]) == 0) {
        throw GraphError("pattern " + pattern_name(p, i) +
                         " has an isolated vertex; its orbit degree is zero");
      }
    }
    for (int k = 0; k < o.num_edge_orbits(); ++k) {
      const auto [tail, head] = o.edge_orbit_ends[k];
      const bool one_way = !o.edge_orbit_reversible[k];
      const int col = c.edge_offset(i) + k;
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) {
          sums(v, c.vertex_offset(i) + tail) += edge_counts(g.arc_index(v, u), col);
          if (one_way) sums(v, c.vertex_offset(i) + head) += edge_counts(g.arc_index(u, v), col);
        }
      }
    }
    for (int orbit = 0; orbit < o.num_vertex_orbits(); ++orbit) {
      const std::int64_t deg = p.graph.degree(o.vertex_orbits[orbit][0]);
      auto column = sums.col(c.vertex_offset(i) + orbit);
      if ((column.array() - (column.array() / deg) * deg).any()) {
        throw GraphError("edge counts of " + pattern_name(p, i) +
                         " are not a multiple of the orbit degree");
      }
      column /= deg;
    }
  }
  return sums;
}

DeckReport deck_check(const Graph& g, const Collection* all_graphs) {
  const int n = g.num_vertices();
  if (n < 4 || n > 8) throw GraphError("deck_check needs 4 <= n <= 8");
  Collection local;
  if (all_graphs == nullptr) {
    local = all_graphs_of_size(n - 1);
    all_graphs = &local;
  }
  if (all_graphs->size() == 0 || all_graphs->patterns().front().size != n - 1) {
    throw GraphError("deck_check needs the collection of all graphs on n-1 vertices");
  }
  DeckReport report;
  report.n = n;
  const CountMatrix x = compute_features(g, *all_graphs, {true, false, std::nullopt}).vertex_counts;

  // The deck, classified independently of the matcher.
  std::vector<Graph> deck;
  for (Vertex removed = 0; removed < n; ++removed) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (v != removed) keep.push_back(v);
    }
    deck.push_back(g.induced_subgraph(keep));
  }
  for (std::size_t j = 0; j < all_graphs->size(); ++j) {
    const SubstructurePattern& p = all_graphs->patterns()[j];
    DeckEntry e;
    e.pattern = pattern_name(p, j);
    e.orbit_sum =
        x.middleCols(all_graphs->vertex_offset(j), p.orbits.num_vertex_orbits()).sum();
    for (const Graph& card : deck) e.deck_count += are_isomorphic(card, p.graph) ? 1 : 0;
    if (e.orbit_sum != static_cast<std::int64_t>(n - 1) * e.deck_count) report.holds = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

Vocabulary Vocabulary::build(const std::vector<const CountMatrix*>& data, int columns) {
  std::vector<std::set<std::int64_t>> seen(columns);
  for (const CountMatrix* m : data) {
    if (m->cols() != columns) throw std::out_of_range("feature matrices differ in width");
    for (Eigen::Index r = 0; r < m->rows(); ++r) {
      for (int c = 0; c < columns; ++c) seen[c].insert((*m)(r, c));
    }
  }
  std::vector<std::vector<std::int64_t>> values;
  for (auto& s : seen) {
    // A column never observed (no rows at all) still gets the zero value.
    if (s.empty()) s.insert(0);
    values.emplace_back(s.begin(), s.end());
  }
  return Vocabulary(std::move(values));
}

int Vocabulary::width() const {
  int w = 0;
  for (const auto& v : values_) w += static_cast<int>(v.size());
  return w;
}

int Vocabulary::index(int column, std::int64_t value) const {
  const auto& v = values_.at(column);
  auto it = std::lower_bound(v.begin(), v.end(), value);
  if (it == v.end() || *it != value) {
    throw std::out_of_range("value " + std::to_string(value) + " not in vocabulary of column " +
                            std::to_string(column));
  }
  return static_cast<int>(it - v.begin());
}

nlohmann::json Vocabulary::to_json() const { return nlohmann::json{{"columns", values_}}; }

Vocabulary Vocabulary::from_json(const nlohmann::json& j) {
  auto values = j.at("columns").get<std::vector<std::vector<std::int64_t>>>();
  for (auto& v : values) {
    if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw std::invalid_argument("vocabulary columns must be strictly increasing");
    }
  }
  return Vocabulary(std::move(values));
}

double disambiguation_score(const std::vector<Graph>& graphs,
                            const std::vector<CountMatrix>& vertex_counts) {
  if (graphs.empty()) throw std::invalid_argument("disambiguation score of an empty dataset");
  if (graphs.size() != vertex_counts.size()) {
    throw std::invalid_argument("one feature matrix per graph is required");
  }
  std::int64_t unique = 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const CountMatrix& x = vertex_counts[i];
    std::set<std::vector<std::int64_t>> tuples;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<std::int64_t> t{g.vertex_label(v)};
      for (Eigen::Index c = 0; c < x.cols(); ++c) t.push_back(x(v, c));
      tuples.insert(std::move(t));
    }
    unique += static_cast<std::int64_t>(tuples.size());
    total += g.num_vertices();
  }
  if (total == 0) throw std::invalid_argument("disambiguation score of graphs without vertices");
  return static_cast<double>(unique) / static_cast<double>(total);
}

std::vector<std::string> vertex_column_names(const Collection& c) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& p = c.patterns()[i];
    for (int o = 0; o < p.orbits.num_vertex_orbits(); ++o) {
      names.push_back(pattern_name(p, i) + ":o" + std::to_string(o));
    }
  }
  return names;
}

std::vector<std::string> edge_column_names(const Collection& c) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& p = c.patterns()[i];
    for (int o = 0; o < p.orbits.num_edge_orbits(); ++o) {
      names.push_back(pattern_name(p, i) + ":e" + std::to_string(o));
    }
  }
  return names;
}

void write_vertex_csv(std::ostream& out, const Collection& c, bool header,
                      const std::string& graph_id, const CountMatrix& vertex_counts) {
  if (header) {
    out << "graph_id,vertex_id";
    for (const auto& name : vertex_column_names(c)) out << ',' << name;
    out << '\n';
  }
  for (Eigen::Index v = 0; v < vertex_counts.rows(); ++v) {
    out << graph_id << ',' << v;
    for (Eigen::Index k = 0; k < vertex_counts.cols(); ++k) out << ',' << vertex_counts(v, k);
    out << '\n';
  }
}

void write_edge_csv(std::ostream& out, const Collection& c, bool header,
                    const std::string& graph_id, const Graph& g, const CountMatrix& edge_counts) {
  if (header) {
    out << "graph_id,u,v";
    for (const auto& name : edge_column_names(c)) out << ',' << name;
    out << '\n';
  }
  std::size_t arc = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      out << graph_id << ',' << u << ',' << v;
      for (Eigen::Index k = 0; k < edge_counts.cols(); ++k) out << ',' << edge_counts(arc, k);
      out << '\n';
      ++arc;
    }
  }
}

nlohmann::json features_to_json(const Graph& g, const StructuralFeatures& f) {
  nlohmann::json j;
  j["graph_id"] = g.name();
  j["collection"] = f.collection;
  j["mode"] = to_string(f.mode);
  nlohmann::json vertices = nlohmann::json::array();
  for (Eigen::Index v = 0; v < f.vertex_counts.rows(); ++v) {
    std::vector<std::int64_t> row(f.vertex_counts.row(v).begin(), f.vertex_counts.row(v).end());
    vertices.push_back(row);
  }
  j["vertex_counts"] = std::move(vertices);
  if (f.edge_counts.rows() > 0) {
    nlohmann::json arcs = nlohmann::json::array();
    std::size_t arc = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v : g.neighbors(u)) {
        std::vector<std::int64_t> row(f.edge_counts.row(arc).begin(),
                                      f.edge_counts.row(arc).end());
        arcs.push_back({{"u", u}, {"v", v}, {"counts", row}});
        ++arc;
      }
    }
    j["edge_counts"] = std::move(arcs);
  }
  return j;
}

}  // namespace gsn
