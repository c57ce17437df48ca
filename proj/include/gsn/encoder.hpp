#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "gsn/features.hpp"
#include "gsn/graph.hpp"
#include "gsn/random.hpp"

namespace gsn {

enum class Variant { mpnn, gsn_v, gsn_e };

Variant parse_variant(std::string_view name);
std::string to_string(Variant v);

struct EncoderConfig {
  Variant variant = Variant::gsn_e;
  int layers = 2;
  int width = 64;
  int mlp_depth = 2;
  std::uint64_t seed = 0;
  /// Threshold on the Euclidean distance of representations divided by the
  /// vertex count.
  double epsilon = 1e-3;

  void validate() const;
};

nlohmann::json to_json(const EncoderConfig& c);
EncoderConfig encoder_config_from_json(const nlohmann::json& j, EncoderConfig base = {});

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// One-hot inputs of one graph. Rows of the arc matrices follow
/// Graph::arc_index order.
template <typename Scalar>
struct EncoderInputs {
  const Graph* graph = nullptr;
  MatrixX<Scalar> vertex_attr;  // input vertex labels, n x a
  MatrixX<Scalar> vertex_ids;   // GSN-v identifiers, n x b (b = 0 otherwise)
  MatrixX<Scalar> edge_ids;     // GSN-e identifiers, arcs x c (c = 0 otherwise)
  MatrixX<Scalar> edge_attr;    // input edge labels, arcs x d (d = 0 when unlabelled)
};

struct InputDims {
  int vertex_attr = 1;
  int vertex_ids = 0;
  int edge_ids = 0;
  int edge_attr = 0;
  friend bool operator==(const InputDims&, const InputDims&) = default;
};

/// Sum of vectors taken in ascending lexicographic order of their values,
/// so the result depends only on the multiset of terms and not on the
/// order in which vertices happen to be numbered.
template <typename Scalar>
VectorX<Scalar> sorted_sum(std::vector<VectorX<Scalar>>& terms, Eigen::Index dim) {
  std::sort(terms.begin(), terms.end(), [](const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  VectorX<Scalar> acc = VectorX<Scalar>::Zero(dim);
  for (const auto& t : terms) acc += t;
  return acc;
}

/// Multilayer perceptron with ReLU between layers and uniform Glorot
/// weights drawn from the caller's generator.
template <typename Scalar>
class Mlp {
 public:
  Mlp() = default;
  Mlp(int in, int width, int depth, Rng& rng) {
    int fan_in = in;
    for (int l = 0; l < depth; ++l) {
      const Scalar a = std::sqrt(Scalar(6) / Scalar(fan_in + width));
      MatrixX<Scalar> w(width, fan_in);
      for (Eigen::Index r = 0; r < w.rows(); ++r) {
        for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = a * Scalar(2 * uniform01(rng) - 1);
      }
      VectorX<Scalar> b(width);
      for (Eigen::Index r = 0; r < b.size(); ++r) b(r) = a * Scalar(2 * uniform01(rng) - 1);
      weights_.push_back(std::move(w));
      biases_.push_back(std::move(b));
      fan_in = width;
    }
  }

  int in_dim() const { return static_cast<int>(weights_.front().cols()); }

  VectorX<Scalar> operator()(const VectorX<Scalar>& x) const {
    VectorX<Scalar> h = x;
    for (std::size_t l = 0; l < weights_.size(); ++l) {
      h = weights_[l] * h + biases_[l];
      if (l + 1 < weights_.size()) h = h.cwiseMax(Scalar(0));
    }
    // +0 turns any -0 into +0 so equal values are also equal bitwise
    h.array() += Scalar(0);
    return h;
  }

 private:
  std::vector<MatrixX<Scalar>> weights_;
  std::vector<VectorX<Scalar>> biases_;
};

/// Random-weight message passing network:
///   h_v <- UP([h_v ; sum_{u in N(v)} MSG([h_v ; h_u ; identifiers ; e_uv])])
/// followed by a sum readout and a final MLP. Weights are fixed at
/// construction from the seed, so one encoder can be shared by many graphs.
template <typename Scalar = double>
class RandomEncoder {
 public:
  RandomEncoder(const EncoderConfig& cfg, const InputDims& dims) : cfg_(cfg), dims_(dims) {
    cfg_.validate();
    Rng rng(cfg_.seed);
    int h = dims_.vertex_attr;
    for (int t = 0; t < cfg_.layers; ++t) {
      int msg_in = 2 * h + dims_.edge_attr;
      if (cfg_.variant == Variant::gsn_v) msg_in += 2 * dims_.vertex_ids;
      if (cfg_.variant == Variant::gsn_e) msg_in += dims_.edge_ids;
      message_.emplace_back(msg_in, cfg_.width, cfg_.mlp_depth, rng);
      update_.emplace_back(h + cfg_.width, cfg_.width, cfg_.mlp_depth, rng);
      h = cfg_.width;
    }
    readout_ = Mlp<Scalar>(cfg_.width, cfg_.width, cfg_.mlp_depth, rng);
  }

  const EncoderConfig& config() const { return cfg_; }
  const InputDims& dims() const { return dims_; }

  VectorX<Scalar> encode(const EncoderInputs<Scalar>& in) const {
    const Graph& g = *in.graph;
    const int n = g.num_vertices();
    check_shapes(in);
    std::vector<VectorX<Scalar>> h(n);
    for (Vertex v = 0; v < n; ++v) h[v] = in.vertex_attr.row(v).transpose();
    for (int t = 0; t < cfg_.layers; ++t) {
      std::vector<VectorX<Scalar>> next(n);
      for (Vertex v = 0; v < n; ++v) {
        std::vector<VectorX<Scalar>> msgs;
        for (Vertex u : g.neighbors(v)) msgs.push_back(message_[t](message_input(in, h, v, u)));
        const VectorX<Scalar> m = sorted_sum(msgs, cfg_.width);
        VectorX<Scalar> up(h[v].size() + m.size());
        up << h[v], m;
        next[v] = update_[t](up);
        if (!next[v].allFinite()) throw std::overflow_error("non-finite activation in encoder");
      }
      h = std::move(next);
    }
    VectorX<Scalar> pooled = sorted_sum(h, cfg_.width);
    VectorX<Scalar> out = readout_(pooled);
    if (!out.allFinite()) throw std::overflow_error("non-finite graph representation");
    return out;
  }

 private:
  VectorX<Scalar> message_input(const EncoderInputs<Scalar>& in,
                                const std::vector<VectorX<Scalar>>& h, Vertex v, Vertex u) const {
    const Graph& g = *in.graph;
    const auto arc = g.arc_index(u, v);
    Eigen::Index size = h[v].size() + h[u].size() + dims_.edge_attr;
    if (cfg_.variant == Variant::gsn_v) size += 2 * dims_.vertex_ids;
    if (cfg_.variant == Variant::gsn_e) size += dims_.edge_ids;
    VectorX<Scalar> x(size);
    Eigen::Index at = 0;
    auto put = [&](const auto& block) {
      x.segment(at, block.size()) = block.transpose();
      at += block.size();
    };
    put(h[v].transpose());
    put(h[u].transpose());
    if (cfg_.variant == Variant::gsn_v) {
      put(in.vertex_ids.row(v));
      put(in.vertex_ids.row(u));
    }
    if (cfg_.variant == Variant::gsn_e) put(in.edge_ids.row(arc));
    if (dims_.edge_attr > 0) put(in.edge_attr.row(arc));
    return x;
  }

  void check_shapes(const EncoderInputs<Scalar>& in) const {
    const Graph& g = *in.graph;
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (in.vertex_attr.rows() != g.num_vertices() || in.vertex_attr.cols() != dims_.vertex_attr) {
      fail("vertex attribute matrix does not match the encoder");
    }
    if (cfg_.variant == Variant::gsn_v &&
        (in.vertex_ids.rows() != g.num_vertices() || in.vertex_ids.cols() != dims_.vertex_ids)) {
      fail("vertex identifier matrix does not match the encoder vocabulary");
    }
    const auto arcs = static_cast<Eigen::Index>(g.num_arcs());
    if (cfg_.variant == Variant::gsn_e &&
        (in.edge_ids.rows() != arcs || in.edge_ids.cols() != dims_.edge_ids)) {
      fail("edge identifier matrix does not match the encoder vocabulary");
    }
    if (dims_.edge_attr > 0 && (in.edge_attr.rows() != arcs || in.edge_attr.cols() != dims_.edge_attr)) {
      fail("edge attribute matrix does not match the encoder");
    }
  }

  EncoderConfig cfg_;
  InputDims dims_;
  std::vector<Mlp<Scalar>> message_;
  std::vector<Mlp<Scalar>> update_;
  Mlp<Scalar> readout_;
};

/// Shared vocabularies for a set of graphs compared against each other.
struct InputVocabulary {
  Vocabulary vertex_labels;
  Vocabulary edge_labels;
  Vocabulary vertex_ids;
  Vocabulary edge_ids;
  bool has_edge_labels = false;
  InputDims dims;
};

/// Builds vocabularies over all graphs (and their features, when given).
/// `features` may be null for the plain MPNN.
InputVocabulary build_input_vocabulary(const std::vector<const Graph*>& graphs,
                                       const std::vector<const StructuralFeatures*>* features);

template <typename Scalar>
EncoderInputs<Scalar> make_inputs(const Graph& g, const StructuralFeatures* f,
                                  const InputVocabulary& vocab) {
  EncoderInputs<Scalar> in;
  in.graph = &g;
  CountMatrix labels(g.num_vertices(), 1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) labels(v, 0) = g.vertex_label(v);
  in.vertex_attr = vocab.vertex_labels.encode<Scalar>(labels);
  if (f != nullptr) {
    if (f->vertex_counts.rows() > 0) in.vertex_ids = vocab.vertex_ids.encode<Scalar>(f->vertex_counts);
    if (f->edge_counts.rows() > 0) in.edge_ids = vocab.edge_ids.encode<Scalar>(f->edge_counts);
  }
  if (vocab.has_edge_labels) {
    CountMatrix el(static_cast<Eigen::Index>(g.num_arcs()), 1);
    std::size_t arc = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v : g.neighbors(u)) el(static_cast<Eigen::Index>(arc++), 0) = g.edge_label(u, v);
    }
    in.edge_attr = vocab.edge_labels.encode<Scalar>(el);
  }
  return in;
}

/// Distance used by the isomorphism test: ||r1 - r2|| / n.
template <typename Scalar>
double normalized_distance(const VectorX<Scalar>& a, const VectorX<Scalar>& b, int n) {
  return static_cast<double>((a - b).norm()) / std::max(1, n);
}

/// True when the graphs are deemed non-isomorphic by any of the seeds
/// cfg.seed, cfg.seed + 1, ..., cfg.seed + seeds - 1. Features must come
/// from one shared collection; they are ignored by the MPNN variant.
struct GsnTestResult {
  bool distinguished = false;
  std::vector<double> distances;  // one per seed
};

GsnTestResult gsn_isomorphism_test(const Graph& a, const Graph& b, const StructuralFeatures* fa,
                                   const StructuralFeatures* fb, const EncoderConfig& cfg,
                                   int seeds = 1);

}  // namespace gsn
