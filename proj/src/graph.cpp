#include "gsn/graph.hpp"

#include <algorithm>
#include <numeric>

namespace gsn {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges,
             std::optional<std::vector<int>> vertex_labels,
             std::optional<std::map<Edge, int>> edge_labels, std::string name)
    : n_(n), vertex_labels_(std::move(vertex_labels)), edge_labels_(std::move(edge_labels)),
      name_(std::move(name)) {
  if (n < 0) throw GraphError("negative vertex count");
  if (vertex_labels_ && static_cast<int>(vertex_labels_->size()) != n) {
    throw GraphError("vertex_labels has length " + std::to_string(vertex_labels_->size()) +
                     ", expected " + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) +
                     ")");
  }
  if (edge_labels_) {
    for (const auto& [e, label] : *edge_labels_) {
      if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
        throw GraphError("edge label on non-edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ")");
      }
    }
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);

  if (n <= kDenseLimit) {
    words_ = (n + 63) / 64;
    dense_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (const Edge& e : edges_) {
      dense_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |= std::uint64_t(1) << (e.v % 64);
      dense_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |= std::uint64_t(1) << (e.u % 64);
    }
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!dense_.empty()) {
    return (dense_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1;
  }
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::ptrdiff_t Graph::arc_index(Vertex a, Vertex b) const {
  auto first = adj_.begin() + offsets_[a];
  auto last = adj_.begin() + offsets_[a + 1];
  auto it = std::lower_bound(first, last, b);
  if (it == last || *it != b) return -1;
  return it - adj_.begin();
}

std::vector<Vertex> Graph::arc_sources() const {
  std::vector<Vertex> src(adj_.size());
  for (int v = 0; v < n_; ++v) {
    std::fill(src.begin() + offsets_[v], src.begin() + offsets_[v + 1], v);
  }
  return src;
}

int Graph::edge_label(Vertex a, Vertex b) const {
  if (!edge_labels_) return 0;
  auto it = edge_labels_->find(Edge(a, b));
  return it == edge_labels_->end() ? 0 : it->second;
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation has wrong length");
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw GraphError("not a permutation");
    seen[p] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm[e.u], perm[e.v]);
  std::optional<std::vector<int>> vl;
  if (vertex_labels_) {
    vl.emplace(n_);
    for (int v = 0; v < n_; ++v) (*vl)[perm[v]] = (*vertex_labels_)[v];
  }
  std::optional<std::map<Edge, int>> el;
  if (edge_labels_) {
    el.emplace();
    for (const auto& [e, label] : *edge_labels_) el->emplace(Edge(perm[e.u], perm[e.v]), label);
  }
  return Graph(n_, std::move(edges), std::move(vl), std::move(el), name_);
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_ || pos[keep[i]] >= 0) throw GraphError("bad vertex subset");
    pos[keep[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::map<Edge, int>> el;
  if (edge_labels_) el.emplace();
  for (const Edge& e : edges_) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) {
      edges.emplace_back(pos[e.u], pos[e.v]);
      if (el) {
        if (auto it = edge_labels_->find(e); it != edge_labels_->end()) {
          el->emplace(Edge(pos[e.u], pos[e.v]), it->second);
        }
      }
    }
  }
  std::optional<std::vector<int>> vl;
  if (vertex_labels_) {
    vl.emplace();
    for (Vertex v : keep) vl->push_back((*vertex_labels_)[v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges), std::move(vl), std::move(el));
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.edges_ == b.edges_ && a.vertex_labels_ == b.vertex_labels_ &&
         a.edge_labels_ == b.edge_labels_;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::optional<SRParameters> check_strongly_regular(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  const int d = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  if (d >= n) return std::nullopt;
  const Eigen::MatrixXi a = adjacency_matrix<int>(g);
  const Eigen::MatrixXi common = a * a;
  std::optional<int> lambda;
  std::optional<int> mu;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto& slot = a(u, v) ? lambda : mu;
      if (!slot) {
        slot = common(u, v);
      } else if (*slot != common(u, v)) {
        return std::nullopt;
      }
    }
  }
  return SRParameters{n, d, lambda.value_or(0), mu.value_or(0)};
}

}  // namespace gsn
