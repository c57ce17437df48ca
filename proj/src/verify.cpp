#include "gsn/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gsn/catalog.hpp"
#include "gsn/encoder.hpp"
#include "gsn/features.hpp"
#include "gsn/generators.hpp"
#include "gsn/io.hpp"
#include "gsn/iso.hpp"
#include "gsn/random.hpp"
#include "gsn/wl.hpp"

namespace gsn {

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

Theorem parse_theorem(std::string_view name) {
  if (name == "equivariance") return Theorem::equivariance;
  if (name == "reconstruction") return Theorem::reconstruction;
  if (name == "deck") return Theorem::deck;
  if (name == "fwl2_sr") return Theorem::fwl2_sr;
  if (name == "wl_refinement") return Theorem::wl_refinement;
  throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::equivariance: return "equivariance";
    case Theorem::reconstruction: return "reconstruction";
    case Theorem::deck: return "deck";
    case Theorem::fwl2_sr: return "fwl2_sr";
    case Theorem::wl_refinement: return "wl_refinement";
  }
  return "?";
}

namespace {

Graph random_test_graph(int n, Rng& rng, bool labelled) {
  const double p = 0.2 + 0.4 * uniform01(rng);
  Graph g = random_gnp(n, p, rng);
  if (!labelled) return g;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  std::vector<int> labels(n);
  for (int& l : labels) l = static_cast<int>(uniform_below(rng, 3));
  return Graph(n, std::move(edges), std::move(labels));
}

std::string trial_name(int trial, const Graph& g) {
  std::ostringstream s;
  s << "trial " << trial << " n=" << g.num_vertices() << " m=" << g.num_edges() << " "
    << encode_graph6(g);
  return s.str();
}

// Position of the first row where the two matrices disagree, or -1.
Eigen::Index first_mismatch(const CountMatrix& a, const CountMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (a.row(r) != b.row(r)) return r;
  }
  return -1;
}

}  // namespace

VerifyReport verify_equivariance(const VerifyOptions& options) {
  VerifyReport report;
  report.suite = "equivariance";
  Rng rng(options.seed);
  const std::vector<Collection> collections = {
      family_collection(Family::cycle, 6, CountingMode::graphlet),
      family_collection(Family::path, 4, CountingMode::motif),
      family_collection(Family::clique, 4, CountingMode::graphlet)};
  for (int trial = 0; trial < options.trials; ++trial) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = random_test_graph(n, rng, trial % 3 == 2);
    const std::vector<Vertex> sigma = random_permutation(n, rng);
    const Graph h = g.permuted(sigma);
    const Collection& c = collections[trial % collections.size()];
    CheckResult check{trial_name(trial, g) + " " + c.description(), true, {}};

    const StructuralFeatures fg = compute_features(g, c);
    const StructuralFeatures fh = compute_features(h, c);
    for (Vertex v = 0; v < n && check.passed; ++v) {
      if (fg.vertex_counts.row(v) != fh.vertex_counts.row(sigma[v])) {
        check.passed = false;
        check.detail = "vertex counts of " + std::to_string(v) + " do not follow the relabelling";
      }
    }
    for (Vertex u = 0; u < n && check.passed; ++u) {
      for (Vertex v : g.neighbors(u)) {
        if (fg.edge(g, u, v) != fh.edge(h, sigma[u], sigma[v])) {
          check.passed = false;
          check.detail = "edge counts of (" + std::to_string(u) + "," + std::to_string(v) +
                         ") do not follow the relabelling";
          break;
        }
      }
    }

    const std::vector<const Graph*> graphs{&g, &h};
    const std::vector<const StructuralFeatures*> feats{&fg, &fh};
    const InputVocabulary plain_vocab = build_input_vocabulary(graphs, nullptr);
    const InputVocabulary id_vocab = build_input_vocabulary(graphs, &feats);
    for (Variant variant : {Variant::mpnn, Variant::gsn_v, Variant::gsn_e}) {
      if (!check.passed) break;
      EncoderConfig cfg;
      cfg.variant = variant;
      cfg.seed = options.seed + static_cast<std::uint64_t>(trial);
      const bool with_ids = variant != Variant::mpnn;
      const InputVocabulary& vocab = with_ids ? id_vocab : plain_vocab;
      const RandomEncoder<double> enc(cfg, vocab.dims);
      const VectorX<double> a = enc.encode(make_inputs<double>(g, with_ids ? &fg : nullptr, vocab));
      const VectorX<double> b = enc.encode(make_inputs<double>(h, with_ids ? &fh : nullptr, vocab));
      if (!(a.array() == b.array()).all()) {
        check.passed = false;
        check.detail = to_string(variant) + " output changed under relabelling, max diff " +
                       std::to_string((a - b).cwiseAbs().maxCoeff());
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerifyReport verify_reconstruction(const VerifyOptions& options) {
  VerifyReport report;
  report.suite = "reconstruction";
  Rng rng(options.seed);
  const std::vector<Collection> collections = {
      family_collection(Family::cycle, 6, CountingMode::graphlet),
      family_collection(Family::clique, 5, CountingMode::graphlet),
      family_collection(Family::path, 5, CountingMode::graphlet)};
  for (int trial = 0; trial < options.trials; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 14));
    const Graph g = random_test_graph(n, rng, false);
    for (const Collection& c : collections) {
      CheckResult check{trial_name(trial, g) + " " + c.description(), true, {}};
      const StructuralFeatures f = compute_features(g, c);
      const CountMatrix rebuilt = reconstruct_vertex_from_edge(g, c, f.edge_counts);
      const Eigen::Index bad = first_mismatch(rebuilt, f.vertex_counts);
      if (bad >= 0) {
        check.passed = false;
        check.detail = "vertex " + std::to_string(bad) + " differs";
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

VerifyReport verify_deck(const VerifyOptions& options) {
  VerifyReport report;
  report.suite = "deck";
  auto record = [&report](const std::string& name, const DeckReport& d) {
    CheckResult check{name, d.holds, {}};
    for (const DeckEntry& e : d.entries) {
      if (e.orbit_sum != static_cast<std::int64_t>(d.n - 1) * e.deck_count) {
        check.detail = e.pattern + ": orbit sum " + std::to_string(e.orbit_sum) + " vs " +
                       std::to_string(d.n - 1) + " x " + std::to_string(e.deck_count);
        check.passed = false;
        break;
      }
    }
    report.checks.push_back(std::move(check));
  };
  for (int n = 4; n <= 6; ++n) {
    const Collection cards = all_graphs_of_size(n - 1);
    const Collection graphs = all_graphs_of_size(n);
    for (const SubstructurePattern& p : graphs.patterns()) {
      record(p.graph.name() + " " + encode_graph6(p.graph), deck_check(p.graph, &cards));
    }
  }
  Rng rng(options.seed);
  const Collection cards = all_graphs_of_size(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_test_graph(7, rng, false);
    record(trial_name(trial, g), deck_check(g, &cards));
  }
  return report;
}

VerifyReport verify_fwl2_sr(const VerifyOptions& options) {
  VerifyReport report;
  report.suite = "fwl2_sr";
  const auto files = read_graph_directory(options.sr_dir);
  if (files.empty()) {
    report.checks.push_back({"SR files in " + options.sr_dir.string(), false, "none found"});
    return report;
  }
  for (const auto& [name, graphs] : files) {
    std::vector<const Graph*> gptr;
    for (const Graph& g : graphs) gptr.push_back(&g);
    const std::vector<Coloring> joint = kfwl_refine_jointly(gptr, 2);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      CheckResult check{name + " #" + std::to_string(i) + " closed form", true, {}};
      const auto sr = check_strongly_regular(g);
      if (!sr) {
        check.passed = false;
        check.detail = "graph is not strongly regular";
      } else {
        const Coloring c = kfwl_refine(g, 2);
        const std::int64_t n = sr->n, nd = static_cast<std::int64_t>(sr->n) * sr->d;
        std::vector<std::int64_t> got;
        for (const auto& [color, count] : c.histogram) got.push_back(count);
        std::vector<std::int64_t> want{n, nd, n * (n - 1) - nd};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        // Three colours starting from three isomorphism types means each
        // colour class is exactly one type.
        if (got != want || c.num_colors() != 3) {
          check.passed = false;
          check.detail = std::to_string(c.num_colors()) + " colours";
        }
      }
      report.checks.push_back(std::move(check));
    }
    CheckResult same{name + " identical histograms", true, {}};
    for (std::size_t i = 1; i < joint.size(); ++i) {
      if (joint[i].histogram != joint[0].histogram) {
        same.passed = false;
        same.detail = "graph " + std::to_string(i) + " differs from graph 0";
        break;
      }
    }
    report.checks.push_back(std::move(same));
  }
  return report;
}

VerifyReport verify_wl_refinement(const VerifyOptions& options) {
  VerifyReport report;
  report.suite = "wl_refinement";
  Rng rng(options.seed);
  const Collection c = family_collection(Family::cycle, 5, CountingMode::graphlet);
  for (int trial = 0; trial < options.trials; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 7));
    const Graph g = random_test_graph(n, rng, trial % 4 == 3);
    CheckResult check{trial_name(trial, g), true, {}};

    const Coloring plain = wl1_refine(g);
    if (!std::is_sorted(plain.history.begin(), plain.history.end())) {
      check.passed = false;
      check.detail = "colour count decreased between rounds";
    }

    OrbitOptions oo;
    oo.allow_disconnected = true;
    const OrbitPartition orbits = compute_orbits(g, oo);
    for (Vertex v = 0; v < n && check.passed; ++v) {
      const Vertex rep = orbits.vertex_orbits[orbits.vertex_orbit_of[v]].front();
      if (plain.colors[v] != plain.colors[rep]) {
        check.passed = false;
        check.detail = "automorphic vertices " + std::to_string(v) + " and " +
                       std::to_string(rep) + " got different colours";
      }
    }

    const CountMatrix x = vertex_features(g, c);
    std::vector<std::vector<std::int64_t>> init(n);
    for (Vertex v = 0; v < n; ++v) {
      init[v].assign(x.row(v).begin(), x.row(v).end());
      init[v].push_back(g.vertex_label(v));
    }
    const Coloring rich = wl1_refine(g, init);
    std::map<int, int> rich_to_plain;
    for (Vertex v = 0; v < n && check.passed; ++v) {
      const auto [it, fresh] = rich_to_plain.emplace(rich.colors[v], plain.colors[v]);
      if (!fresh && it->second != plain.colors[v]) {
        check.passed = false;
        check.detail = "substructure colouring merges vertices that 1-WL separates";
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerifyReport run_verify(Theorem t, const VerifyOptions& options) {
  switch (t) {
    case Theorem::equivariance: return verify_equivariance(options);
    case Theorem::reconstruction: return verify_reconstruction(options);
    case Theorem::deck: return verify_deck(options);
    case Theorem::fwl2_sr: return verify_fwl2_sr(options);
    case Theorem::wl_refinement: return verify_wl_refinement(options);
  }
  throw std::invalid_argument("unknown verification suite");
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"suite", r.suite},
          {"cases", r.checks.size()},
          {"failures", r.failures()},
          {"passed", r.passed()},
          {"checks", checks}};
}

}  // namespace gsn
