#include "gsn/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace gsn {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.num_vertices()) {}

  CanonicalForm run() {
    Partition p = initial_partition();
    refine(p);
    search(p);
    CanonicalForm out;
    out.position = best_position_;
    out.code = *best_code_;
    return out;
  }

 private:
  Partition initial_partition() const {
    std::map<std::pair<int, int>, std::vector<Vertex>> cells;
    for (Vertex v = 0; v < n_; ++v) cells[{g_.vertex_label(v), g_.degree(v)}].push_back(v);
    Partition p;
    for (auto& [key, cell] : cells) p.push_back(std::move(cell));
    return p;
  }

  // Equitable refinement. A cell is split by the number of neighbours each
  // member has inside a splitter cell; pieces are ordered by that count so
  // the result does not depend on the input labelling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        std::vector<char> in_splitter(n_, 0);
        for (Vertex v : p[s]) in_splitter[v] = 1;
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() < 2) continue;
          std::map<int, std::vector<Vertex>> pieces;
          for (Vertex v : p[c]) {
            int cnt = 0;
            for (Vertex u : g_.neighbors(v)) cnt += in_splitter[u];
            pieces[cnt].push_back(v);
          }
          if (pieces.size() < 2) continue;
          Partition split;
          for (auto& [cnt, piece] : pieces) split.push_back(std::move(piece));
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::string code_for(const std::vector<int>& position) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[position[v]] = v;
    std::string code = std::to_string(n_) + ":";
    for (int i = 0; i < n_; ++i) code += std::to_string(g_.vertex_label(at[i])) + ",";
    code += ":";
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) code.push_back(g_.adjacent(at[i], at[j]) ? '1' : '0');
    }
    if (g_.has_edge_labels()) {
      code += ":";
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
          if (g_.adjacent(at[i], at[j])) code += std::to_string(g_.edge_label(at[i], at[j])) + ",";
        }
      }
    }
    return code;
  }

  bool twins(Vertex a, Vertex b) const {
    if (g_.has_edge_labels()) return false;
    if (g_.vertex_label(a) != g_.vertex_label(b) || g_.degree(a) != g_.degree(b)) return false;
    for (Vertex u : g_.neighbors(a)) {
      if (u != b && !g_.adjacent(b, u)) return false;
    }
    return true;
  }

  void search(const Partition& p) {
    auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<int> position(n_);
      for (std::size_t i = 0; i < p.size(); ++i) position[p[i][0]] = static_cast<int>(i);
      std::string code = code_for(position);
      if (!best_code_ || code < *best_code_) {
        best_code_ = std::move(code);
        best_position_ = std::move(position);
      }
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> tried;
    for (Vertex v : p[idx]) {
      // Swapping two twins is an automorphism fixing every individualised
      // vertex, so their subtrees yield identical codes.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); })) continue;
      tried.push_back(v);
      Partition child = p;
      std::vector<Vertex> rest;
      for (Vertex u : p[idx]) {
        if (u != v) rest.push_back(u);
      }
      child[idx] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(idx) + 1, rest);
      refine(child);
      search(child);
    }
  }

  const Graph& g_;
  int n_;
  std::optional<std::string> best_code_;
  std::vector<int> best_position_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.num_vertices() == 0) return {{}, "0::"};
  return Canonicalizer(g).run();
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm cf = canonical_form(g);
  return g.permuted(cf.position);
}

}  // namespace gsn
