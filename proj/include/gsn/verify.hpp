#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gsn {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  /// Directory with the bundled SR graph6 files.
  std::filesystem::path sr_dir;
};

enum class Theorem { equivariance, reconstruction, deck, fwl2_sr, wl_refinement };

Theorem parse_theorem(std::string_view name);
std::string to_string(Theorem t);

/// Vertex and edge counts move with a random relabelling, and every encoder
/// variant returns bit-identical outputs on relabelled inputs.
VerifyReport verify_equivariance(const VerifyOptions& options);
/// Vertex counts recovered from edge counts equal the directly computed ones
/// on random graphs with n <= 15, for cycles <= 6, cliques <= 5, paths <= 5.
VerifyReport verify_reconstruction(const VerifyOptions& options);
/// Orbit sums versus (n-1) times deck multiplicities, all graphs with
/// n = 4, 5, 6 and 50 random graphs with n = 7.
VerifyReport verify_deck(const VerifyOptions& options);
/// Identical 2-FWL histograms within each SR file, and the three-colour
/// closed form for every graph in it.
VerifyReport verify_fwl2_sr(const VerifyOptions& options);
/// Colour counts never decrease over rounds, automorphic vertices share a
/// colour, and substructure-initialised refinement is at least as fine as
/// plain 1-WL.
VerifyReport verify_wl_refinement(const VerifyOptions& options);

VerifyReport run_verify(Theorem t, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace gsn
