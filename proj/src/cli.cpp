#include "gsn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsn/bench.hpp"
#include "gsn/catalog.hpp"
#include "gsn/encoder.hpp"
#include "gsn/features.hpp"
#include "gsn/generators.hpp"
#include "gsn/io.hpp"
#include "gsn/iso.hpp"
#include "gsn/parallel.hpp"
#include "gsn/sr_experiment.hpp"
#include "gsn/verify.hpp"
#include "gsn/wl.hpp"

namespace gsn {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kFormatVersion = 1;

// Bad input that should end the run with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  double epsilon = 1e-3;
  int jobs = 0;
  std::string format = "csv";
  double timeout_secs = 60;
  std::string output;
};

struct CollectionOptions {
  std::string family = "cycle";
  int k = 6;
  std::string mode = "graphlet";
  std::optional<bool> induced;
  std::string collection_file;
  std::string patterns_file;
};

void add_collection_flags(CLI::App* cmd, CollectionOptions& o) {
  cmd->add_option("--family", o.family, "cycle, path, clique, tree, star or custom")
      ->capture_default_str();
  cmd->add_option("--k", o.k, "largest pattern size")->capture_default_str();
  cmd->add_option("--mode", o.mode, "graphlet (induced) or motif (non-induced)")
      ->capture_default_str();
  cmd->add_option("--induced", o.induced, "overrides --mode: true = graphlet, false = motif");
  cmd->add_option("--collection", o.collection_file, "collection JSON written by a previous run");
  cmd->add_option("--patterns", o.patterns_file, "graph6/JSON patterns for --family custom");
}

Collection make_collection(const CollectionOptions& o) {
  if (!o.collection_file.empty()) {
    try {
      return collection_from_json(json::parse(read_text(o.collection_file)));
    } catch (const json::exception& e) {
      throw InputError(o.collection_file + ": " + e.what());
    }
  }
  CountingMode mode = parse_counting_mode(o.mode);
  if (o.induced) mode = *o.induced ? CountingMode::graphlet : CountingMode::motif;
  const Family family = parse_family(o.family);
  if (family == Family::custom) {
    if (o.patterns_file.empty()) throw InputError("--family custom needs --patterns");
    std::vector<SubstructurePattern> patterns;
    for (const Graph& h : read_graphs(o.patterns_file)) patterns.push_back(make_pattern(h, family));
    if (patterns.empty()) throw InputError(o.patterns_file + " holds no patterns");
    Collection c(std::move(patterns), mode);
    c.set_description("custom:" + std::filesystem::path(o.patterns_file).stem().string() + "/" +
                      to_string(mode));
    return c;
  }
  return family_collection(family, o.k, mode);
}

std::vector<Graph> load_inputs(const std::vector<std::string>& paths) {
  std::vector<Graph> graphs;
  for (const std::string& p : paths) {
    if (p != "-" && std::filesystem::is_directory(p)) {
      for (auto& [name, gs] : read_graph_directory(p)) {
        for (Graph& g : gs) graphs.push_back(std::move(g));
      }
    } else {
      if (p != "-" && !std::filesystem::exists(p)) throw InputError(p + ": no such file");
      for (Graph& g : read_graphs(p)) graphs.push_back(std::move(g));
    }
  }
  if (graphs.empty()) throw InputError("no graphs in input");
  return graphs;
}

std::optional<Clock::time_point> deadline_after(double secs) {
  if (secs <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(secs));
}

json report_header(const std::string& command, const GlobalOptions& g) {
  return {{"format_version", kFormatVersion},
          {"command", command},
          {"config",
           {{"seed", g.seed},
            {"epsilon", g.epsilon},
            {"jobs", resolve_jobs(g.jobs)},
            {"timeout_secs", g.timeout_secs}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int min_family_size(Family f) {
  return f == Family::cycle || f == Family::clique ? 3 : 2;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::vector<std::string> inputs;
  CollectionOptions collection;
  std::string level = "vertex";
};

int cmd_count(const CountArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::vector<Graph> graphs = load_inputs(a.inputs);
  const Collection c = make_collection(a.collection);
  const bool edges = a.level == "edge" || a.level == "both";
  const bool vertices = a.level == "vertex" || a.level == "both";
  std::vector<StructuralFeatures> feats(graphs.size());
  parallel_for(graphs.size(), g.jobs, [&](std::size_t i) {
    FeatureOptions fo{vertices, edges, deadline_after(g.timeout_secs)};
    feats[i] = compute_features(graphs[i], c, fo);
  });
  if (g.format == "json") {
    json r = report_header("count", g);
    r["config"]["collection"] = collection_to_json(c);
    r["config"]["level"] = a.level;
    json results = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      json item = features_to_json(graphs[i], feats[i]);
      item["graph_id"] = graphs[i].name();
      results.push_back(std::move(item));
    }
    r["results"] = std::move(results);
    r["summary"] = {{"graphs", graphs.size()}};
    out << r.dump(2) << '\n';
    return kExitOk;
  }
  if (a.level == "both") throw InputError("--level both needs --format json");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (vertices) {
      write_vertex_csv(out, c, i == 0, graphs[i].name(), feats[i].vertex_counts);
    } else {
      write_edge_csv(out, c, i == 0, graphs[i].name(), graphs[i], feats[i].edge_counts);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- wl

struct WLArgs {
  std::vector<std::string> inputs;
  std::string test = "wl1";
};

int cmd_wl(const WLArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::vector<Graph> graphs = load_inputs(a.inputs);
  if (graphs.size() < 2) throw InputError("wl needs at least two graphs");
  const WLTest test = parse_wl_test(a.test);
  std::vector<const Graph*> gptr;
  for (const Graph& x : graphs) gptr.push_back(&x);
  // Graphs of equal size are refined jointly; pairs of unequal size are
  // distinguished without refinement.
  std::map<int, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < graphs.size(); ++i) by_size[graphs[i].num_vertices()].push_back(i);
  std::vector<Histogram> hist(graphs.size());
  for (const auto& [n, idx] : by_size) {
    std::vector<const Graph*> group;
    for (std::size_t i : idx) group.push_back(gptr[i]);
    const std::vector<Histogram> h = wl_histograms(group, test);
    for (std::size_t j = 0; j < idx.size(); ++j) hist[idx[j]] = h[j];
  }
  json results = json::array();
  if (g.format != "json") out << "graph_a,graph_b,test,distinguished\n";
  std::size_t distinguished = 0;
  for (const auto& [x, y] : all_pairs(graphs.size())) {
    const bool d = graphs[x].num_vertices() != graphs[y].num_vertices() || hist[x] != hist[y];
    distinguished += d;
    if (g.format == "json") {
      results.push_back({{"graph_a", graphs[x].name()},
                         {"graph_b", graphs[y].name()},
                         {"distinguished", d},
                         {"colors_a", hist[x].size()},
                         {"colors_b", hist[y].size()}});
    } else {
      out << csv_field(graphs[x].name()) << ',' << csv_field(graphs[y].name()) << ','
          << to_string(test) << ',' << (d ? "true" : "false") << '\n';
    }
  }
  if (g.format == "json") {
    json r = report_header("wl", g);
    r["config"]["test"] = to_string(test);
    r["results"] = std::move(results);
    r["summary"] = {{"pairs", graphs.size() * (graphs.size() - 1) / 2},
                    {"distinguished", distinguished}};
    out << r.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gsn-test

struct EncoderArgs {
  std::string variant = "gsn_e";
  int layers = 2;
  int width = 64;
  int mlp_depth = 2;
  int seeds = 1;
  std::string config_file;
};

void add_encoder_flags(CLI::App* cmd, EncoderArgs& e) {
  cmd->add_option("--variant", e.variant, "mpnn, gsn_v or gsn_e")->capture_default_str();
  cmd->add_option("--layers", e.layers)->capture_default_str();
  cmd->add_option("--width", e.width)->capture_default_str();
  cmd->add_option("--mlp-depth", e.mlp_depth)->capture_default_str();
  cmd->add_option("--seeds", e.seeds, "weight draws; a pair is distinguished if any draw separates it")
      ->capture_default_str();
  cmd->add_option("--encoder-config", e.config_file, "encoder configuration JSON");
}

EncoderConfig make_encoder_config(const EncoderArgs& e, const GlobalOptions& g) {
  EncoderConfig cfg;
  cfg.variant = parse_variant(e.variant);
  cfg.layers = e.layers;
  cfg.width = e.width;
  cfg.mlp_depth = e.mlp_depth;
  cfg.seed = g.seed;
  cfg.epsilon = g.epsilon;
  if (!e.config_file.empty()) {
    try {
      cfg = encoder_config_from_json(json::parse(read_text(e.config_file)), cfg);
    } catch (const json::exception& ex) {
      throw InputError(e.config_file + ": " + ex.what());
    }
  }
  if (e.seeds < 1) throw InputError("--seeds must be at least 1");
  cfg.validate();
  return cfg;
}

struct GsnTestArgs {
  std::vector<std::string> inputs;
  CollectionOptions collection;
  EncoderArgs encoder;
};

int cmd_gsn_test(const GsnTestArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::vector<Graph> graphs = load_inputs(a.inputs);
  if (graphs.size() < 2) throw InputError("gsn-test needs at least two graphs");
  const EncoderConfig cfg = make_encoder_config(a.encoder, g);
  std::optional<Collection> c;
  std::vector<StructuralFeatures> feats(graphs.size());
  if (cfg.variant != Variant::mpnn) {
    c = make_collection(a.collection);
    parallel_for(graphs.size(), g.jobs, [&](std::size_t i) {
      FeatureOptions fo{cfg.variant == Variant::gsn_v, cfg.variant == Variant::gsn_e,
                        deadline_after(g.timeout_secs)};
      feats[i] = compute_features(graphs[i], *c, fo);
    });
  }
  const auto pairs = all_pairs(graphs.size());
  std::vector<GsnTestResult> res(pairs.size());
  parallel_for(pairs.size(), g.jobs, [&](std::size_t i) {
    const auto [x, y] = pairs[i];
    const bool ids = cfg.variant != Variant::mpnn;
    res[i] = gsn_isomorphism_test(graphs[x], graphs[y], ids ? &feats[x] : nullptr,
                                  ids ? &feats[y] : nullptr, cfg, a.encoder.seeds);
  });
  const std::string cname = c ? c->description() : "none";
  std::size_t distinguished = 0;
  json results = json::array();
  if (g.format != "json") out << "graph_a,graph_b,variant,collection,seeds,distinguished,max_distance\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    const double dmax = *std::max_element(res[i].distances.begin(), res[i].distances.end());
    distinguished += res[i].distinguished;
    if (g.format == "json") {
      results.push_back({{"graph_a", graphs[x].name()},
                         {"graph_b", graphs[y].name()},
                         {"distinguished", res[i].distinguished},
                         {"distances", res[i].distances}});
    } else {
      out << csv_field(graphs[x].name()) << ',' << csv_field(graphs[y].name()) << ','
          << to_string(cfg.variant) << ',' << csv_field(cname) << ',' << a.encoder.seeds << ','
          << (res[i].distinguished ? "true" : "false") << ',' << std::setprecision(17) << dmax
          << '\n';
    }
  }
  if (g.format == "json") {
    json r = report_header("gsn-test", g);
    r["config"]["encoder"] = to_json(cfg);
    r["config"]["seeds"] = a.encoder.seeds;
    if (c) r["config"]["collection"] = collection_to_json(*c);
    r["results"] = std::move(results);
    r["summary"] = {{"pairs", pairs.size()}, {"distinguished", distinguished}};
    out << r.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sr-bench

struct SRBenchArgs {
  std::string dir = std::string(GSN_DATA_DIR) + "/sr";
  std::vector<std::string> configs;
  std::string variants = "gsn_e";
  std::string baselines = "wl1,fwl2,mpnn";
  EncoderArgs encoder;
  bool full = false;
  int max_n = 29;
  std::optional<std::size_t> sample_pairs;
};

SRGsnSpec parse_sr_config(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw InputError("bad --config '" + s + "', expected family:k[:mode]");
  }
  SRGsnSpec spec;
  spec.family = parse_family(parts[0]);
  try {
    spec.k = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw InputError("bad size in --config '" + s + "'");
  }
  if (parts.size() == 3) spec.mode = parse_counting_mode(parts[2]);
  return spec;
}

int cmd_sr_bench(const SRBenchArgs& a, const GlobalOptions& g, std::ostream& out,
                 std::ostream& err) {
  const int max_n = a.full ? std::numeric_limits<int>::max() : a.max_n;
  const std::vector<SRFamily> families = load_sr_families(a.dir, max_n);
  if (families.empty()) throw InputError("no SR graph6 files in " + a.dir);
  for (const SRFamily& f : families) {
    if (!f.params) throw InputError(f.name + ": first graph is not strongly regular");
  }
  const std::vector<GraphPair> pairs = same_size_pairs(families, a.sample_pairs, g.seed);
  EncoderConfig cfg = make_encoder_config(a.encoder, g);

  std::vector<SRGsnSpec> specs;
  std::vector<std::string> configs = a.configs;
  if (configs.empty()) {
    for (const char* fam : {"cycle", "path"}) {
      for (int k = 3; k <= 6; ++k) configs.push_back(std::string(fam) + ":" + std::to_string(k));
    }
  }
  for (const std::string& v : split(a.variants, ',')) {
    const Variant variant = parse_variant(v);
    if (variant == Variant::mpnn) throw InputError("use --baselines for mpnn");
    for (const std::string& s : configs) {
      SRGsnSpec spec = parse_sr_config(s);
      spec.variant = variant;
      specs.push_back(spec);
    }
  }

  std::vector<SRRunResult> results;
  for (const std::string& b : split(a.baselines, ',')) {
    if (b == "none") continue;
    if (b == "mpnn") {
      results.push_back(run_sr_mpnn(families, pairs, cfg, a.encoder.seeds, g.jobs));
    } else {
      results.push_back(run_sr_wl(families, pairs, parse_wl_test(b), g.jobs));
    }
    err << results.back().label << ": " << results.back().failures << "/" << pairs.size()
        << " failures\n";
  }
  for (const SRGsnSpec& s : specs) {
    results.push_back(run_sr_gsn(families, pairs, s, cfg, a.encoder.seeds, g.jobs));
    err << results.back().label << ": " << results.back().failures << "/" << pairs.size()
        << " failures\n";
  }

  if (g.format == "json") {
    json r = report_header("sr-bench", g);
    json fams = json::array();
    for (const SRFamily& f : families) {
      fams.push_back({{"name", f.name},
                      {"graphs", f.graphs.size()},
                      {"n", f.params->n},
                      {"d", f.params->d},
                      {"lambda", f.params->lambda},
                      {"mu", f.params->mu}});
    }
    r["config"]["families"] = std::move(fams);
    r["config"]["encoder"] = to_json(cfg);
    r["config"]["seeds"] = a.encoder.seeds;
    r["config"]["max_n"] = a.full ? -1 : a.max_n;
    if (a.sample_pairs) r["config"]["sample_pairs"] = *a.sample_pairs;
    json rs = json::array();
    for (const SRRunResult& x : results) rs.push_back(to_json(x));
    r["results"] = std::move(rs);
    r["summary"] = {{"pairs", pairs.size()}};
    out << r.dump(2) << '\n';
  } else {
    out << "configuration,pairs,failures,failure_fraction,feature_distinguished,"
           "min_distance_distinguished,max_distance_failed,seconds\n";
    for (const SRRunResult& x : results) {
      out << csv_field(x.label) << ',' << x.pairs << ',' << x.failures << ','
          << std::setprecision(17) << x.failure_fraction() << ',' << x.feature_distinguished << ','
          << x.min_distance_distinguished << ',' << x.max_distance_failed << ',' << x.seconds
          << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  int trials = 100;
  std::string sr_dir = std::string(GSN_DATA_DIR) + "/sr";
};

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  std::vector<Theorem> suites;
  if (a.suite == "all") {
    suites = {Theorem::equivariance, Theorem::reconstruction, Theorem::deck, Theorem::fwl2_sr,
              Theorem::wl_refinement};
  } else {
    suites.push_back(parse_theorem(a.suite));
  }
  VerifyOptions vo;
  vo.seed = g.seed;
  vo.trials = a.trials;
  vo.sr_dir = a.sr_dir;
  std::vector<VerifyReport> reports;
  for (Theorem t : suites) {
    reports.push_back(run_verify(t, vo));
    err << reports.back().suite << ": " << reports.back().checks.size() - reports.back().failures()
        << "/" << reports.back().checks.size() << " passed\n";
  }
  bool ok = true;
  for (const VerifyReport& r : reports) ok = ok && r.passed();
  if (g.format == "json") {
    json r = report_header("verify", g);
    r["config"]["trials"] = a.trials;
    r["config"]["sr_dir"] = a.sr_dir;
    json rs = json::array();
    for (const VerifyReport& x : reports) rs.push_back(to_json(x));
    r["results"] = std::move(rs);
    r["summary"] = {{"passed", ok}};
    out << r.dump(2) << '\n';
  } else {
    out << "suite,case,passed,detail\n";
    for (const VerifyReport& r : reports) {
      for (const CheckResult& c : r.checks) {
        out << r.suite << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ','
            << csv_field(c.detail) << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- delta

struct DeltaArgs {
  std::vector<std::string> inputs;
  CollectionOptions collection;
};

int cmd_delta(const DeltaArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::vector<Graph> graphs = load_inputs(a.inputs);
  const Family family = parse_family(a.collection.family);
  if (family == Family::custom || family == Family::all_graphs) {
    throw InputError("delta runs over a named family");
  }
  CountingMode mode = parse_counting_mode(a.collection.mode);
  if (a.collection.induced) mode = *a.collection.induced ? CountingMode::graphlet : CountingMode::motif;
  std::size_t vertices = 0;
  for (const Graph& x : graphs) vertices += x.num_vertices();

  struct Row {
    int k;
    double delta;
  };
  std::vector<Row> rows;
  std::vector<CountMatrix> none;
  for (const Graph& x : graphs) none.emplace_back(x.num_vertices(), 0);
  rows.push_back({0, disambiguation_score(graphs, none)});
  for (int k = min_family_size(family); k <= a.collection.k; ++k) {
    const Collection c = family_collection(family, k, mode);
    std::vector<CountMatrix> counts(graphs.size());
    parallel_for(graphs.size(), g.jobs, [&](std::size_t i) {
      FeatureOptions fo{true, false, deadline_after(g.timeout_secs)};
      counts[i] = compute_features(graphs[i], c, fo).vertex_counts;
    });
    rows.push_back({k, disambiguation_score(graphs, counts)});
  }
  if (g.format == "json") {
    json r = report_header("delta", g);
    r["config"]["family"] = to_string(family);
    r["config"]["mode"] = to_string(mode);
    r["config"]["k"] = a.collection.k;
    json rs = json::array();
    for (const Row& x : rows) rs.push_back({{"k", x.k}, {"delta", x.delta}});
    r["results"] = std::move(rs);
    r["summary"] = {{"graphs", graphs.size()}, {"vertices", vertices}};
    out << r.dump(2) << '\n';
  } else {
    out << "family,k,mode,graphs,vertices,delta\n";
    for (const Row& x : rows) {
      out << to_string(family) << ',' << x.k << ',' << to_string(mode) << ',' << graphs.size()
          << ',' << vertices << ',' << std::setprecision(6) << std::fixed << x.delta
          << std::defaultfloat << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> inputs;
  CollectionOptions collection;
  std::string generate;
  std::string sizes = "50,100,200,400,800";
  double avg_degree = 3;
  int reps = 3;
  bool parallel = false;
  bool no_warmup = false;
  std::string curve_file;
};

std::vector<Graph> generate_bench_graphs(const BenchArgs& a, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (const std::string& s : split(a.sizes, ',')) {
    int n = 0;
    try {
      n = std::stoi(s);
    } catch (const std::exception&) {
      throw InputError("bad size '" + s + "' in --sizes");
    }
    if (n < 1) throw InputError("sizes must be positive");
    Graph g;
    if (a.generate == "tree") {
      g = random_tree(n, rng);
    } else if (a.generate == "sparse") {
      g = random_gnm(n, static_cast<std::size_t>(a.avg_degree * n / 2), rng);
    } else if (a.generate == "complete") {
      g = complete_graph(n);
    } else if (a.generate == "empty") {
      g = empty_graph(n);
    } else {
      throw InputError("--generate must be tree, sparse, complete or empty");
    }
    out.push_back(g.with_name(a.generate + "_" + std::to_string(n)));
  }
  return out;
}

int cmd_bench(const BenchArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (a.generate.empty() == a.inputs.empty()) {
    throw InputError("bench needs either input graphs or --generate");
  }
  const std::vector<Graph> graphs =
      a.generate.empty() ? load_inputs(a.inputs) : generate_bench_graphs(a, g.seed);
  const Collection c = make_collection(a.collection);
  BenchOptions bo;
  bo.reps = a.reps;
  bo.timeout_secs = g.timeout_secs;
  bo.warmup = !a.no_warmup;
  bo.parallel = a.parallel;
  bo.jobs = g.jobs;
  const std::vector<BenchRecord> records = run_bench(graphs, c, bo);

  std::map<int, std::vector<BenchRecord>> by_k;
  for (const BenchRecord& r : records) by_k[r.k].push_back(r);
  json fits = json::array();
  json curves = json::array();
  for (const auto& [k, rs] : by_k) {
    const LogLogFit fit = fit_loglog(rs);
    err << "k=" << k << ": log-log slope " << fit.slope << " over " << fit.points << " points\n";
    fits.push_back({{"k", k}, {"slope", fit.slope}, {"intercept", fit.intercept}, {"points", fit.points}});
    for (const auto& [n, t] : worst_case_curve(rs, k)) curves.push_back({{"k", k}, {"n", n}, {"seconds", t}});
  }
  if (!a.curve_file.empty()) {
    std::ofstream f(a.curve_file);
    if (!f) throw InputError("cannot write " + a.curve_file);
    f << "k,n,worst_case_seconds\n";
    for (const auto& row : curves) {
      f << row["k"].get<int>() << ',' << row["n"].get<int>() << ',' << std::setprecision(17)
        << row["seconds"].get<double>() << '\n';
    }
  }
  if (g.format == "json") {
    json r = report_header("bench", g);
    r["config"]["collection"] = collection_to_json(c);
    r["config"]["reps"] = a.reps;
    r["config"]["parallel"] = a.parallel;
    if (!a.generate.empty()) {
      r["config"]["generate"] = a.generate;
      r["config"]["sizes"] = a.sizes;
      r["config"]["avg_degree"] = a.avg_degree;
    }
    json rs = json::array();
    for (const BenchRecord& x : records) {
      rs.push_back({{"graph_id", x.graph_id}, {"n", x.n},          {"m", x.m},
                    {"family", x.family},     {"k", x.k},          {"seconds", x.seconds},
                    {"count", x.count},       {"reps", x.reps},    {"timed_out", x.timed_out},
                    {"comparable", x.comparable}});
    }
    r["results"] = std::move(rs);
    r["summary"] = {{"fits", fits}, {"worst_case", curves}};
    out << r.dump(2) << '\n';
  } else {
    write_bench_csv(out, records);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgraph-count features, WL tests and random-weight GSN isomorphism tests", "gsn"};
  app.require_subcommand(1);
  // global flags are accepted after the subcommand name too
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--epsilon", g.epsilon, "distance threshold on ||h_a - h_b|| / n")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", g.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--timeout-secs", g.timeout_secs, "per graph/pattern time cap (0 = none)")
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "write the report to a file instead of stdout");

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "per-vertex or per-arc substructure counts");
  c_count->add_option("inputs", count.inputs, "graph6/JSON files or directories")->required();
  add_collection_flags(c_count, count.collection);
  c_count->add_option("--level", count.level, "vertex, edge or both (json only)")
      ->check(CLI::IsMember({"vertex", "edge", "both"}))
      ->capture_default_str();

  WLArgs wl;
  auto* c_wl = app.add_subcommand("wl", "1-WL / 2-FWL / 3-FWL pairwise test");
  c_wl->add_option("inputs", wl.inputs)->required();
  c_wl->add_option("--test", wl.test, "wl1, fwl2 or fwl3")->capture_default_str();

  GsnTestArgs gt;
  auto* c_gt = app.add_subcommand("gsn-test", "random-weight GSN isomorphism test on all pairs");
  c_gt->add_option("inputs", gt.inputs)->required();
  add_collection_flags(c_gt, gt.collection);
  add_encoder_flags(c_gt, gt.encoder);

  SRBenchArgs sr;
  auto* c_sr = app.add_subcommand("sr-bench", "failure fractions on same-size SR pairs");
  c_sr->add_option("dir", sr.dir, "directory of SR graph6 files")->capture_default_str();
  c_sr->add_option("--config", sr.configs, "family:k[:mode], repeatable (default cycle/path 3..6)");
  c_sr->add_option("--variants", sr.variants, "comma list of gsn_v, gsn_e")->capture_default_str();
  c_sr->add_option("--baselines", sr.baselines, "comma list of wl1, fwl2, fwl3, mpnn or none")
      ->capture_default_str();
  add_encoder_flags(c_sr, sr.encoder);
  c_sr->add_flag("--full", sr.full, "include every file regardless of size");
  c_sr->add_option("--max-n", sr.max_n, "skip files with more vertices")->capture_default_str();
  c_sr->add_option("--sample-pairs", sr.sample_pairs, "seeded uniform sample of pairs");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("suite", ver.suite,
                    "equivariance, reconstruction, deck, fwl2_sr, wl_refinement or all")
      ->capture_default_str();
  c_ver->add_option("--trials", ver.trials)->capture_default_str();
  c_ver->add_option("--sr-dir", ver.sr_dir)->capture_default_str();

  DeltaArgs delta;
  auto* c_delta = app.add_subcommand("delta", "disambiguation score per pattern size");
  c_delta->add_option("inputs", delta.inputs, "JSON dataset files or directories")->required();
  add_collection_flags(c_delta, delta.collection);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "subgraph counting runtime versus n");
  c_bench->add_option("inputs", bench.inputs);
  add_collection_flags(c_bench, bench.collection);
  c_bench->add_option("--generate", bench.generate, "tree, sparse, complete or empty");
  c_bench->add_option("--sizes", bench.sizes, "comma list of n for --generate")->capture_default_str();
  c_bench->add_option("--avg-degree", bench.avg_degree, "average degree for --generate sparse")
      ->capture_default_str();
  c_bench->add_option("--reps", bench.reps)->capture_default_str();
  c_bench->add_flag("--parallel", bench.parallel, "throughput mode, records marked non-comparable");
  c_bench->add_flag("--no-warmup", bench.no_warmup);
  c_bench->add_option("--curve", bench.curve_file, "write the n^k reference curve as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      err << "gsn: cannot write " << g.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = g.output.empty() ? out : file;
  try {
    if (*c_count) return cmd_count(count, g, sink);
    if (*c_wl) return cmd_wl(wl, g, sink);
    if (*c_gt) return cmd_gsn_test(gt, g, sink);
    if (*c_sr) return cmd_sr_bench(sr, g, sink, err);
    if (*c_ver) return cmd_verify(ver, g, sink, err);
    if (*c_delta) return cmd_delta(delta, g, sink);
    if (*c_bench) return cmd_bench(bench, g, sink, err);
  } catch (const MatchTimeout& e) {
    err << "gsn: timed out after " << g.timeout_secs << " s: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gsn: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gsn
