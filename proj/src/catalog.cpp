#include "gsn/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gsn/canonical.hpp"
#include "gsn/generators.hpp"
#include "gsn/io.hpp"

namespace gsn {

Family parse_family(std::string_view name) {
  if (name == "cycle" || name == "cycles") return Family::cycle;
  if (name == "path" || name == "paths") return Family::path;
  if (name == "clique" || name == "cliques") return Family::clique;
  if (name == "tree" || name == "trees") return Family::tree;
  if (name == "star" || name == "stars") return Family::star;
  if (name == "custom") return Family::custom;
  if (name == "all" || name == "all-graphs") return Family::all_graphs;
  throw GraphError("unknown family: " + std::string(name));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::clique: return "clique";
    case Family::tree: return "tree";
    case Family::star: return "star";
    case Family::custom: return "custom";
    case Family::all_graphs: return "all-graphs";
  }
  return "custom";
}

CountingMode parse_counting_mode(std::string_view name) {
  if (name == "graphlet" || name == "induced") return CountingMode::graphlet;
  if (name == "motif" || name == "non-induced") return CountingMode::motif;
  throw GraphError("unknown counting mode: " + std::string(name));
}

std::string to_string(CountingMode m) {
  return m == CountingMode::graphlet ? "graphlet" : "motif";
}

Collection::Collection(std::vector<SubstructurePattern> patterns, CountingMode mode,
                       bool allow_disconnected)
    : patterns_(std::move(patterns)), mode_(mode), allow_disconnected_(allow_disconnected) {
  std::set<std::string> codes;
  for (const auto& p : patterns_) {
    if (!codes.insert(canonical_code(p.graph)).second) {
      throw GraphError("collection contains isomorphic patterns (" + p.graph.name() + ")");
    }
    vertex_offsets_.push_back(vertex_offsets_.back() + p.orbits.num_vertex_orbits());
    edge_offsets_.push_back(edge_offsets_.back() + p.orbits.num_edge_orbits());
  }
}

MatchOptions Collection::match_options() const {
  MatchOptions o;
  o.induced = mode_ == CountingMode::graphlet;
  o.allow_disconnected = allow_disconnected_;
  return o;
}

SubstructurePattern make_pattern(const Graph& h, Family family, bool allow_disconnected) {
  SubstructurePattern p;
  p.graph = h;
  OrbitOptions oo;
  oo.max_vertices = std::max(oo.max_vertices, h.num_vertices());
  oo.allow_disconnected = allow_disconnected;
  p.orbits = compute_orbits(h, oo);
  p.family = family;
  p.size = h.num_vertices();
  return p;
}

std::vector<Graph> nonisomorphic_trees(int m) {
  if (m < 1) return {};
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= m; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.num_vertices(); ++v) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const Edge& e : t.edges()) edges.emplace_back(e.u, e.v);
        edges.emplace_back(v, size - 1);
        Graph grown(size, std::move(edges));
        std::string code = canonical_code(grown);
        next.emplace(std::move(code), canonical_graph(grown));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(g);
  }
  for (std::size_t i = 0; i < level.size(); ++i) {
    level[i] = level[i].with_name("T" + std::to_string(m) + "_" + std::to_string(i));
  }
  return level;
}

namespace {

void check_k(Family family, int k_max, int lowest, int highest) {
  if (k_max < lowest) {
    throw GraphError(to_string(family) + " collections need k >= " + std::to_string(lowest));
  }
  if (k_max > highest) {
    throw GraphError(to_string(family) + " collections are capped at k = " +
                     std::to_string(highest));
  }
}

}  // namespace

Collection family_collection(Family family, int k_max, CountingMode mode,
                             const CatalogLimits& limits) {
  std::vector<Graph> graphs;
  switch (family) {
    case Family::cycle:
      check_k(family, k_max, 3, limits.max_other_size);
      for (int k = 3; k <= k_max; ++k) graphs.push_back(cycle_graph(k));
      break;
    case Family::clique:
      check_k(family, k_max, 3, limits.max_other_size);
      for (int k = 3; k <= k_max; ++k) graphs.push_back(complete_graph(k));
      break;
    case Family::path:
      check_k(family, k_max, 2, limits.max_other_size);
      for (int k = 2; k <= k_max; ++k) graphs.push_back(path_graph(k));
      break;
    case Family::star:
      check_k(family, k_max, 2, limits.max_other_size);
      for (int k = 2; k <= k_max; ++k) graphs.push_back(star_graph(k - 1));
      break;
    case Family::tree:
      check_k(family, k_max, 2, limits.max_tree_size);
      for (int k = 2; k <= k_max; ++k) {
        for (Graph& t : nonisomorphic_trees(k)) graphs.push_back(std::move(t));
      }
      break;
    case Family::custom:
    case Family::all_graphs:
      throw GraphError("family " + to_string(family) + " has no size-indexed generator");
  }
  std::vector<SubstructurePattern> patterns;
  for (const Graph& g : graphs) patterns.push_back(make_pattern(g, family));
  Collection c(std::move(patterns), mode);
  c.set_description(to_string(family) + "<=" + std::to_string(k_max) + "/" + to_string(mode));
  return c;
}

Collection all_graphs_of_size(int m) {
  if (m < 1 || m > 7) throw GraphError("all_graphs_of_size supports 1 <= m <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < m; ++v) {
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  }
  // Grow edge by edge, keeping one representative per class at each edge
  // count; every graph with e+1 edges is some graph with e edges plus one.
  std::map<std::string, Graph> layer{{canonical_code(empty_graph(m)), empty_graph(m)}};
  std::vector<Graph> all;
  while (!layer.empty()) {
    std::map<std::string, Graph> next;
    for (auto& [code, g] : layer) {
      all.push_back(g);
      for (auto [u, v] : slots) {
        if (g.adjacent(u, v)) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
        edges.emplace_back(u, v);
        Graph h(m, std::move(edges));
        std::string c = canonical_code(h);
        if (!next.count(c)) next.emplace(std::move(c), canonical_graph(h));
      }
    }
    layer = std::move(next);
  }
  std::vector<SubstructurePattern> patterns;
  for (std::size_t i = 0; i < all.size(); ++i) {
    patterns.push_back(make_pattern(
        all[i].with_name("G" + std::to_string(m) + "_" + std::to_string(i)),
        Family::all_graphs, true));
  }
  Collection c(std::move(patterns), CountingMode::graphlet, true);
  c.set_description("all-graphs=" + std::to_string(m) + "/graphlet");
  return c;
}

Collection concat(const std::vector<Collection>& parts) {
  if (parts.empty()) return Collection({}, CountingMode::graphlet);
  std::vector<SubstructurePattern> patterns;
  std::string description;
  bool disconnected = false;
  for (const Collection& c : parts) {
    if (c.mode() != parts.front().mode()) {
      throw GraphError("cannot combine graphlet and motif collections");
    }
    disconnected = disconnected || c.allow_disconnected();
    patterns.insert(patterns.end(), c.patterns().begin(), c.patterns().end());
    if (!description.empty()) description += "+";
    description += c.description();
  }
  Collection out(std::move(patterns), parts.front().mode(), disconnected);
  out.set_description(description);
  return out;
}

nlohmann::json collection_to_json(const Collection& c) {
  nlohmann::json j;
  j["mode"] = to_string(c.mode());
  j["description"] = c.description();
  j["allow_disconnected"] = c.allow_disconnected();
  j["vertex_dims"] = c.vertex_dims();
  j["edge_dims"] = c.edge_dims();
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& p : c.patterns()) {
    nlohmann::json pj = graph_to_json(p.graph);
    pj["family"] = to_string(p.family);
    pj["aut_size"] = p.orbits.aut_size;
    pj["vertex_orbits"] = p.orbits.vertex_orbits;
    nlohmann::json eo = nlohmann::json::array();
    for (std::size_t k = 0; k < p.orbits.edge_orbits.size(); ++k) {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : p.orbits.edge_orbits[k]) edges.push_back({e.u, e.v});
      eo.push_back({{"edges", edges},
                    {"tail_orbit", p.orbits.edge_orbit_ends[k].first},
                    {"head_orbit", p.orbits.edge_orbit_ends[k].second},
                    {"reversible", static_cast<bool>(p.orbits.edge_orbit_reversible[k])}});
    }
    pj["edge_orbits"] = std::move(eo);
    patterns.push_back(std::move(pj));
  }
  j["patterns"] = std::move(patterns);
  return j;
}

Collection collection_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("patterns") || !j["patterns"].is_array()) {
    throw ParseError(0, "collection JSON needs a \"patterns\" array");
  }
  const CountingMode mode = parse_counting_mode(j.value("mode", std::string("graphlet")));
  const bool disconnected = j.value("allow_disconnected", false);
  std::vector<SubstructurePattern> patterns;
  for (const auto& pj : j["patterns"]) {
    const Family family = parse_family(pj.value("family", std::string("custom")));
    // Orbits are always recomputed so a hand-edited file cannot disagree
    // with its graphs.
    patterns.push_back(make_pattern(parse_json_graph(pj), family, disconnected));
  }
  Collection c(std::move(patterns), mode, disconnected);
  c.set_description(j.value("description", std::string("custom")));
  return c;
}

}  // namespace gsn
