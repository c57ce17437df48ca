#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsn/catalog.hpp"
#include "gsn/encoder.hpp"
#include "gsn/graph.hpp"
#include "gsn/wl.hpp"

namespace gsn {

/// Graphs of one SR parameter set, as read from one graph6 file.
struct SRFamily {
  std::string name;
  std::vector<Graph> graphs;
  std::optional<SRParameters> params;
};

/// Loads every *.g6 file of a directory as one family. Files whose graphs
/// have more than `max_n` vertices are skipped.
std::vector<SRFamily> load_sr_families(const std::filesystem::path& dir, int max_n = 1 << 30);

struct GraphPair {
  std::size_t family = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// All unordered pairs within each family. With `sample` set, a seeded
/// uniform sample of that many pairs (without replacement) is returned.
std::vector<GraphPair> same_size_pairs(const std::vector<SRFamily>& families,
                                       std::optional<std::size_t> sample = std::nullopt,
                                       std::uint64_t seed = 0);

struct SRRunResult {
  std::string label;
  std::size_t pairs = 0;
  /// Non-isomorphic pairs the test deemed isomorphic.
  std::size_t failures = 0;
  /// Pairs whose vertex or arc feature multisets already differ
  /// (GSN configurations only).
  std::size_t feature_distinguished = 0;
  /// Smallest distance among distinguished pairs and largest among failed
  /// ones, over all seeds (GSN configurations only).
  double min_distance_distinguished = 0;
  double max_distance_failed = 0;
  double seconds = 0;

  double failure_fraction() const { return pairs ? static_cast<double>(failures) / pairs : 0.0; }
};

struct SRGsnSpec {
  Family family = Family::cycle;
  int k = 6;
  CountingMode mode = CountingMode::graphlet;
  Variant variant = Variant::gsn_e;
};

std::string label(const SRGsnSpec& s);

/// Random-weight GSN test over the given pairs. Features are computed once
/// per graph, the vocabulary is frozen per family and every graph is
/// encoded once per seed; a pair counts as distinguished if any seed
/// separates it by more than cfg.epsilon.
SRRunResult run_sr_gsn(const std::vector<SRFamily>& families, const std::vector<GraphPair>& pairs,
                       const SRGsnSpec& spec, const EncoderConfig& cfg, int seeds, int jobs);

/// Plain MPNN (no identifiers) under the same protocol.
SRRunResult run_sr_mpnn(const std::vector<SRFamily>& families,
                        const std::vector<GraphPair>& pairs, const EncoderConfig& cfg, int seeds,
                        int jobs);

/// WL baseline: a pair fails when the stable histograms coincide.
SRRunResult run_sr_wl(const std::vector<SRFamily>& families, const std::vector<GraphPair>& pairs,
                      WLTest test, int jobs);

nlohmann::json to_json(const SRRunResult& r);

}  // namespace gsn
