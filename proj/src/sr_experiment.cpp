#include "gsn/sr_experiment.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "gsn/features.hpp"
#include "gsn/io.hpp"
#include "gsn/parallel.hpp"
#include "gsn/random.hpp"

namespace gsn {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using RowMultiset = std::multiset<std::vector<std::int64_t>>;

RowMultiset rows_of(const CountMatrix& m) {
  RowMultiset out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out.emplace(m.row(r).begin(), m.row(r).end());
  }
  return out;
}

// Encodes every graph of every family once per seed. representations[f][g][s].
std::vector<std::vector<std::vector<VectorX<double>>>> encode_families(
    const std::vector<SRFamily>& families,
    const std::vector<std::vector<StructuralFeatures>>* features, const EncoderConfig& cfg,
    int seeds, int jobs) {
  std::vector<std::vector<std::vector<VectorX<double>>>> reps(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& graphs = families[f].graphs;
    std::vector<const Graph*> gptr;
    for (const auto& g : graphs) gptr.push_back(&g);
    std::vector<const StructuralFeatures*> fptr;
    if (features) {
      for (const auto& x : (*features)[f]) fptr.push_back(&x);
    }
    const InputVocabulary vocab = build_input_vocabulary(gptr, features ? &fptr : nullptr);
    std::vector<RandomEncoder<double>> encoders;
    for (int s = 0; s < seeds; ++s) {
      EncoderConfig c = cfg;
      c.seed = cfg.seed + static_cast<std::uint64_t>(s);
      encoders.emplace_back(c, vocab.dims);
    }
    reps[f].resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
      const auto in = make_inputs<double>(graphs[i], features ? fptr[i] : nullptr, vocab);
      for (const auto& enc : encoders) reps[f][i].push_back(enc.encode(in));
    });
  }
  return reps;
}

SRRunResult compare_pairs(const std::vector<SRFamily>& families,
                          const std::vector<GraphPair>& pairs,
                          const std::vector<std::vector<std::vector<VectorX<double>>>>& reps,
                          double epsilon) {
  SRRunResult r;
  r.pairs = pairs.size();
  r.min_distance_distinguished = std::numeric_limits<double>::infinity();
  r.max_distance_failed = 0;
  for (const GraphPair& p : pairs) {
    const int n = families[p.family].graphs[p.a].num_vertices();
    const auto& ra = reps[p.family][p.a];
    const auto& rb = reps[p.family][p.b];
    double best = 0;
    for (std::size_t s = 0; s < ra.size(); ++s) best = std::max(best, normalized_distance(ra[s], rb[s], n));
    if (best > epsilon) {
      r.min_distance_distinguished = std::min(r.min_distance_distinguished, best);
    } else {
      ++r.failures;
      r.max_distance_failed = std::max(r.max_distance_failed, best);
    }
  }
  if (r.failures == r.pairs) r.min_distance_distinguished = 0;
  return r;
}

}  // namespace

std::vector<SRFamily> load_sr_families(const std::filesystem::path& dir, int max_n) {
  std::vector<SRFamily> out;
  for (auto& [name, graphs] : read_graph_directory(dir)) {
    if (graphs.empty() || graphs.front().num_vertices() > max_n) continue;
    SRFamily f;
    f.name = name;
    f.params = check_strongly_regular(graphs.front());
    f.graphs = std::move(graphs);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<GraphPair> same_size_pairs(const std::vector<SRFamily>& families,
                                       std::optional<std::size_t> sample, std::uint64_t seed) {
  std::vector<GraphPair> all;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& graphs = families[f].graphs;
    for (std::size_t a = 0; a < graphs.size(); ++a) {
      for (std::size_t b = a + 1; b < graphs.size(); ++b) {
        if (graphs[a].num_vertices() == graphs[b].num_vertices()) all.push_back({f, a, b});
      }
    }
  }
  if (!sample || *sample >= all.size()) return all;
  Rng rng(seed);
  // partial Fisher-Yates
  for (std::size_t i = 0; i < *sample; ++i) {
    const std::size_t j = i + uniform_below(rng, all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(*sample);
  std::sort(all.begin(), all.end(), [](const GraphPair& x, const GraphPair& y) {
    return std::tie(x.family, x.a, x.b) < std::tie(y.family, y.a, y.b);
  });
  return all;
}

std::string label(const SRGsnSpec& s) {
  return to_string(s.variant) + ":" + to_string(s.family) + "<=" + std::to_string(s.k) + "/" +
         to_string(s.mode);
}

SRRunResult run_sr_gsn(const std::vector<SRFamily>& families, const std::vector<GraphPair>& pairs,
                       const SRGsnSpec& spec, const EncoderConfig& cfg, int seeds, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const Collection c = family_collection(spec.family, spec.k, spec.mode);
  std::vector<std::vector<StructuralFeatures>> features(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    features[f].resize(families[f].graphs.size());
    parallel_for(families[f].graphs.size(), jobs, [&](std::size_t i) {
      FeatureOptions fo;
      fo.vertices = spec.variant == Variant::gsn_v;
      fo.edges = spec.variant == Variant::gsn_e;
      features[f][i] = compute_features(families[f].graphs[i], c, fo);
    });
  }
  EncoderConfig ecfg = cfg;
  ecfg.variant = spec.variant;
  const auto reps = encode_families(families, &features, ecfg, seeds, jobs);
  SRRunResult r = compare_pairs(families, pairs, reps, cfg.epsilon);
  r.label = label(spec);

  std::vector<std::vector<RowMultiset>> multisets(families.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (const auto& x : features[f]) {
      multisets[f].push_back(spec.variant == Variant::gsn_v ? rows_of(x.vertex_counts)
                                                            : rows_of(x.edge_counts));
    }
  }
  for (const GraphPair& p : pairs) {
    if (multisets[p.family][p.a] != multisets[p.family][p.b]) ++r.feature_distinguished;
  }
  r.seconds = seconds_since(t0);
  return r;
}

SRRunResult run_sr_mpnn(const std::vector<SRFamily>& families,
                        const std::vector<GraphPair>& pairs, const EncoderConfig& cfg, int seeds,
                        int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  EncoderConfig ecfg = cfg;
  ecfg.variant = Variant::mpnn;
  const auto reps = encode_families(families, nullptr, ecfg, seeds, jobs);
  SRRunResult r = compare_pairs(families, pairs, reps, cfg.epsilon);
  r.label = "mpnn";
  r.seconds = seconds_since(t0);
  return r;
}

SRRunResult run_sr_wl(const std::vector<SRFamily>& families, const std::vector<GraphPair>& pairs,
                      WLTest test, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  // One joint refinement per family: with a shared colour context the
  // comparison of two histograms at the joint stable round agrees with a
  // pairwise run.
  std::vector<std::vector<Histogram>> hist(families.size());
  parallel_for(families.size(), jobs, [&](std::size_t f) {
    std::vector<const Graph*> gptr;
    for (const auto& g : families[f].graphs) gptr.push_back(&g);
    hist[f] = wl_histograms(gptr, test);
  });
  SRRunResult r;
  r.label = to_string(test);
  r.pairs = pairs.size();
  for (const GraphPair& p : pairs) {
    if (hist[p.family][p.a] == hist[p.family][p.b]) ++r.failures;
  }
  r.seconds = seconds_since(t0);
  return r;
}

nlohmann::json to_json(const SRRunResult& r) {
  nlohmann::json j{{"label", r.label},
                   {"pairs", r.pairs},
                   {"failures", r.failures},
                   {"failure_fraction", r.failure_fraction()},
                   {"seconds", r.seconds}};
  if (r.label.rfind("gsn", 0) == 0 || r.label == "mpnn") {
    j["min_distance_distinguished"] = r.min_distance_distinguished;
    j["max_distance_failed"] = r.max_distance_failed;
  }
  if (r.label.rfind("gsn", 0) == 0) j["feature_distinguished"] = r.feature_distinguished;
  return j;
}

}  // namespace gsn
