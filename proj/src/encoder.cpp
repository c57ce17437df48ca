#include "gsn/encoder.hpp"

namespace gsn {

Variant parse_variant(std::string_view name) {
  if (name == "mpnn") return Variant::mpnn;
  if (name == "gsn_v" || name == "gsn-v") return Variant::gsn_v;
  if (name == "gsn_e" || name == "gsn-e") return Variant::gsn_e;
  throw std::invalid_argument("unknown encoder variant: " + std::string(name));
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::mpnn: return "mpnn";
    case Variant::gsn_v: return "gsn_v";
    case Variant::gsn_e: return "gsn_e";
  }
  return "mpnn";
}

void EncoderConfig::validate() const {
  if (layers < 1) throw std::invalid_argument("encoder needs at least one layer");
  if (width < 1) throw std::invalid_argument("encoder width must be positive");
  if (mlp_depth < 1) throw std::invalid_argument("MLP depth must be positive");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
}

nlohmann::json to_json(const EncoderConfig& c) {
  return {{"variant", to_string(c.variant)}, {"layers", c.layers},       {"width", c.width},
          {"mlp_depth", c.mlp_depth},        {"seed", c.seed},           {"epsilon", c.epsilon},
          {"readout", "sum"}};
}

EncoderConfig encoder_config_from_json(const nlohmann::json& j, EncoderConfig base) {
  if (j.contains("variant")) base.variant = parse_variant(j["variant"].get<std::string>());
  base.layers = j.value("layers", base.layers);
  base.width = j.value("width", base.width);
  base.mlp_depth = j.value("mlp_depth", base.mlp_depth);
  base.seed = j.value("seed", base.seed);
  base.epsilon = j.value("epsilon", base.epsilon);
  if (j.contains("readout") && j["readout"] != "sum") {
    throw std::invalid_argument("only the sum readout is supported");
  }
  base.validate();
  return base;
}

InputVocabulary build_input_vocabulary(const std::vector<const Graph*>& graphs,
                                       const std::vector<const StructuralFeatures*>* features) {
  InputVocabulary v;
  std::vector<CountMatrix> labels;
  std::vector<CountMatrix> edge_labels;
  for (const Graph* g : graphs) {
    CountMatrix l(g->num_vertices(), 1);
    for (Vertex x = 0; x < g->num_vertices(); ++x) l(x, 0) = g->vertex_label(x);
    labels.push_back(std::move(l));
    v.has_edge_labels = v.has_edge_labels || g->has_edge_labels();
  }
  if (v.has_edge_labels) {
    for (const Graph* g : graphs) {
      CountMatrix el(static_cast<Eigen::Index>(g->num_arcs()), 1);
      std::size_t arc = 0;
      for (Vertex a = 0; a < g->num_vertices(); ++a) {
        for (Vertex b : g->neighbors(a)) el(static_cast<Eigen::Index>(arc++), 0) = g->edge_label(a, b);
      }
      edge_labels.push_back(std::move(el));
    }
  }
  auto ptrs = [](const std::vector<CountMatrix>& m) {
    std::vector<const CountMatrix*> p;
    for (const auto& x : m) p.push_back(&x);
    return p;
  };
  v.vertex_labels = Vocabulary::build(ptrs(labels), 1);
  v.dims.vertex_attr = v.vertex_labels.width();
  if (v.has_edge_labels) {
    v.edge_labels = Vocabulary::build(ptrs(edge_labels), 1);
    v.dims.edge_attr = v.edge_labels.width();
  }
  if (features != nullptr && !features->empty()) {
    std::vector<const CountMatrix*> vx, ex;
    for (const StructuralFeatures* f : *features) {
      if (f->vertex_counts.rows() > 0) vx.push_back(&f->vertex_counts);
      if (f->edge_counts.rows() > 0) ex.push_back(&f->edge_counts);
    }
    const auto& first = *features->front();
    v.vertex_ids = Vocabulary::build(vx, static_cast<int>(first.vertex_counts.cols()));
    v.edge_ids = Vocabulary::build(ex, static_cast<int>(first.edge_counts.cols()));
    if (!vx.empty()) v.dims.vertex_ids = v.vertex_ids.width();
    if (!ex.empty()) v.dims.edge_ids = v.edge_ids.width();
  }
  return v;
}

GsnTestResult gsn_isomorphism_test(const Graph& a, const Graph& b, const StructuralFeatures* fa,
                                   const StructuralFeatures* fb, const EncoderConfig& cfg,
                                   int seeds) {
  if (seeds < 1) throw std::invalid_argument("at least one seed is required");
  if (cfg.variant != Variant::mpnn && (fa == nullptr || fb == nullptr)) {
    throw std::invalid_argument("GSN variants need structural features for both graphs");
  }
  const std::vector<const Graph*> graphs{&a, &b};
  std::vector<const StructuralFeatures*> feats;
  if (cfg.variant != Variant::mpnn) feats = {fa, fb};
  const InputVocabulary vocab =
      build_input_vocabulary(graphs, cfg.variant == Variant::mpnn ? nullptr : &feats);
  const auto ia = make_inputs<double>(a, cfg.variant == Variant::mpnn ? nullptr : fa, vocab);
  const auto ib = make_inputs<double>(b, cfg.variant == Variant::mpnn ? nullptr : fb, vocab);
  GsnTestResult out;
  for (int s = 0; s < seeds; ++s) {
    EncoderConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(s);
    const RandomEncoder<double> enc(c, vocab.dims);
    const double d = normalized_distance(enc.encode(ia), enc.encode(ib),
                                         std::max(a.num_vertices(), b.num_vertices()));
    out.distances.push_back(d);
    if (d > cfg.epsilon) out.distinguished = true;
  }
  return out;
}

}  // namespace gsn
