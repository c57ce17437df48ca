#pragma once

#include <string>
#include <vector>

#include "gsn/graph.hpp"

namespace gsn {

/// Canonical labelling of a small graph.
///
/// `position[v]` is the canonical index of vertex v; `code` is a string that
/// is equal for two graphs iff they are isomorphic (vertex and edge labels
/// included). Search is individualisation-refinement with twin pruning and
/// is meant for pattern-sized graphs (tens of vertices at most).
struct CanonicalForm {
  std::vector<int> position;
  std::string code;
};

CanonicalForm canonical_form(const Graph& g);

inline std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

/// g relabelled so that vertex v becomes canonical_form(g).position[v].
Graph canonical_graph(const Graph& g);

}  // namespace gsn
