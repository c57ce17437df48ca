#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gsn/graph.hpp"

namespace gsn {

/// Malformed input. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Graph6Options {
  /// Records declaring more vertices than this are rejected.
  long long max_vertices = 100000;
};

/// Decodes graph6 records, one per line. An optional ">>graph6<<" header is
/// accepted at the start of the input and at the start of any line; blank
/// lines are skipped. Graphs are named "<name_prefix><index>".
std::vector<Graph> parse_graph6(std::string_view bytes, const Graph6Options& options = {},
                                const std::string& name_prefix = "");

/// graph6 encoding of a single graph, without header or newline.
std::string encode_graph6(const Graph& g);

/// {"n": 3, "edges": [[0,1],...], "vertex_labels": [...],
///  "edge_labels": [[u, v, label], ...], "name": "..."}
Graph parse_json_graph(const nlohmann::json& j);
Graph parse_json_graph(std::string_view text);
nlohmann::json graph_to_json(const Graph& g);

/// Reads every graph from a .g6 / .json file or from standard input ("-").
/// JSON input may hold one graph object, an array of them, or an object
/// with a "graphs" array. Format is chosen by extension, then by content.
std::vector<Graph> read_graphs(const std::string& path, const Graph6Options& options = {});

/// Reads all files matching *.g6 / *.json in a directory, sorted by name.
std::vector<std::pair<std::string, std::vector<Graph>>> read_graph_directory(
    const std::filesystem::path& dir, const Graph6Options& options = {});

std::string read_text(const std::string& path);

}  // namespace gsn
