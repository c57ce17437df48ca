#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gsn/graph.hpp"

namespace gsn {

/// Injective colour assignment: each distinct key gets the next integer.
/// Sharing one context between graphs makes their colours comparable.
class ColorContext {
 public:
  int intern(const std::vector<std::int64_t>& key);
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::vector<std::int64_t>, int> table_;
};

using Histogram = std::vector<std::pair<int, std::int64_t>>;

struct Coloring {
  /// One colour per vertex (1-WL) or per k-tuple indexed v1*n^(k-1)+...+vk.
  std::vector<int> colors;
  /// Number of refinement rounds performed.
  int rounds = 0;
  /// Distinct colours (over all jointly refined graphs) before round 1 and
  /// after every round.
  std::vector<int> history;
  Histogram histogram;
  int num_colors() const { return static_cast<int>(histogram.size()); }
};

Histogram make_histogram(const std::vector<int>& colors);

struct WLOptions {
  /// Append edge labels to neighbour colours.
  bool use_edge_labels = false;
  int max_n_fwl2 = 40;
  int max_n_fwl3 = 20;
};

/// Runs 1-WL on every graph in lockstep in one shared colour context until
/// the joint partition stops refining. `initial[i]`, when given, holds raw
/// per-vertex keys for graph i (vertex labels are used otherwise).
std::vector<Coloring> wl1_refine_jointly(
    const std::vector<const Graph*>& graphs,
    const std::vector<std::vector<std::vector<std::int64_t>>>* initial = nullptr,
    const WLOptions& options = {});

Coloring wl1_refine(const Graph& g,
                    const std::optional<std::vector<std::vector<std::int64_t>>>& initial = {},
                    const WLOptions& options = {});

/// Folklore k-WL (k = 2 or 3) from isomorphism-type initial colours, jointly
/// over all graphs.
std::vector<Coloring> kfwl_refine_jointly(const std::vector<const Graph*>& graphs, int k,
                                          const WLOptions& options = {});

Coloring kfwl_refine(const Graph& g, int k, const WLOptions& options = {});

enum class WLTest { wl1, fwl2, fwl3 };

WLTest parse_wl_test(std::string_view name);
std::string to_string(WLTest t);

/// True when the stable histograms differ, i.e. the test proves the graphs
/// non-isomorphic. Graphs of different sizes are distinguished immediately.
bool wl_distinguish(const Graph& a, const Graph& b, WLTest test, const WLOptions& options = {});

/// Histograms of every graph under one shared context, for batch pairwise
/// comparison (equal histograms = not distinguished).
std::vector<Histogram> wl_histograms(const std::vector<const Graph*>& graphs, WLTest test,
                                     const WLOptions& options = {});

}  // namespace gsn
