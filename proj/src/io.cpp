#include "gsn/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <cctype>
#include <iterator>
#include <limits>
#include <sstream>

namespace gsn {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sixbit(char c, std::size_t line) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) {
    throw ParseError(line, "byte " + std::to_string(v) + " outside the graph6 range 63..126");
  }
  return v - 63;
}

Graph decode_record(std::string_view rec, std::size_t line, const Graph6Options& options,
                    std::string name) {
  if (rec.front() == ':') throw ParseError(line, "sparse6 records are not supported");
  if (rec.front() == '&') throw ParseError(line, "digraph6 records are not supported");
  std::size_t pos = 0;
  long long n = 0;
  const int first = sixbit(rec[pos++], line);
  if (first < 63) {
    n = first;
  } else {
    // 126 prefix: 18-bit size, or 126 126 and a 36-bit size.
    int width = 3;
    if (pos < rec.size() && rec[pos] == '~') {
      ++pos;
      width = 6;
    }
    if (rec.size() < pos + width) throw ParseError(line, "truncated vertex count");
    for (int i = 0; i < width; ++i) n = (n << 6) | sixbit(rec[pos++], line);
  }
  if (n > options.max_vertices) {
    throw ParseError(line, "vertex count " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(options.max_vertices));
  }
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const long long have = static_cast<long long>(rec.size() - pos);
  if (have < need) {
    throw ParseError(line, "truncated bit field: expected " + std::to_string(need) +
                               " bytes, found " + std::to_string(have));
  }
  if (have > need) {
    throw ParseError(line, "trailing bytes after bit field: expected " + std::to_string(need) +
                               " bytes, found " + std::to_string(have));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  int u = 0;
  int v = 1;
  for (long long b = 0; b < need; ++b) {
    const int chunk = sixbit(rec[pos + b], line);
    for (int s = 5; s >= 0 && k < bits; --s, ++k) {
      if ((chunk >> s) & 1) edges.emplace_back(u, v);
      // column-major upper triangle: (0,1) (0,2) (1,2) (0,3) ...
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph(static_cast<int>(n), std::move(edges), std::nullopt, std::nullopt,
               std::move(name));
}

}  // namespace

std::vector<Graph> parse_graph6(std::string_view bytes, const Graph6Options& options,
                                const std::string& name_prefix) {
  std::vector<Graph> graphs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view rec = bytes.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!rec.empty() && rec.back() == '\r') rec.remove_suffix(1);
    if (rec.starts_with(kGraph6Header)) rec.remove_prefix(kGraph6Header.size());
    if (rec.empty()) continue;
    if (rec.front() == '>') throw ParseError(line_no, "malformed header");
    graphs.push_back(decode_record(rec, line_no, options,
                                   name_prefix + std::to_string(graphs.size())));
  }
  return graphs;
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_json_graph(const nlohmann::json& j) {
  auto fail = [](const std::string& msg) -> Graph { throw ParseError(0, msg); };
  if (!j.is_object()) return fail("graph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) return fail("missing integer field \"n\"");
  const long long n = j["n"].get<long long>();
  if (n < 0 || n > std::numeric_limits<int>::max()) return fail("\"n\" out of range");
  if (!j.contains("edges") || !j["edges"].is_array()) return fail("missing array field \"edges\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      return fail("each edge must be a 2-element integer array");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<std::vector<int>> vertex_labels;
  if (j.contains("vertex_labels") && !j["vertex_labels"].is_null()) {
    const auto& vl = j["vertex_labels"];
    if (!vl.is_array()) return fail("\"vertex_labels\" must be an array");
    vertex_labels.emplace();
    for (const auto& x : vl) {
      if (!x.is_number_integer()) return fail("vertex labels must be integers");
      vertex_labels->push_back(x.get<int>());
    }
  }
  std::optional<std::map<Edge, int>> edge_labels;
  if (j.contains("edge_labels") && !j["edge_labels"].is_null()) {
    const auto& el = j["edge_labels"];
    if (!el.is_array()) return fail("\"edge_labels\" must be an array of [u, v, label]");
    edge_labels.emplace();
    for (const auto& x : el) {
      if (!x.is_array() || x.size() != 3 || !x[0].is_number_integer() ||
          !x[1].is_number_integer() || !x[2].is_number_integer()) {
        return fail("each edge label must be [u, v, label]");
      }
      (*edge_labels)[Edge(x[0].get<int>(), x[1].get<int>())] = x[2].get<int>();
    }
  }
  std::string name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(vertex_labels),
                 std::move(edge_labels), std::move(name));
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return parse_json_graph(j);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.vertex_labels()) j["vertex_labels"] = *g.vertex_labels();
  if (g.edge_labels()) {
    nlohmann::json el = nlohmann::json::array();
    for (const auto& [e, label] : *g.edge_labels()) el.push_back({e.u, e.v, label});
    j["edge_labels"] = std::move(el);
  }
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> read_graphs(const std::string& path, const Graph6Options& options) {
  const std::string text = read_text(path);
  const std::filesystem::path p(path);
  bool json = p.extension() == ".json";
  if (p.extension() != ".json" && p.extension() != ".g6") {
    auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    json = it != text.end() && (*it == '{' || *it == '[');
  }
  const std::string stem = path == "-" ? "stdin" : p.stem().string();
  if (!json) return parse_graph6(text, options, stem + "#");

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path + ": invalid JSON: " + e.what());
  }
  std::vector<Graph> graphs;
  const nlohmann::json* list = nullptr;
  if (j.is_array()) {
    list = &j;
  } else if (j.is_object() && j.contains("graphs")) {
    list = &j["graphs"];
  }
  if (list == nullptr) {
    Graph g = parse_json_graph(j);
    graphs.push_back(g.name().empty() ? g.with_name(stem) : g);
    return graphs;
  }
  for (const auto& item : *list) {
    Graph g = parse_json_graph(item);
    if (g.name().empty()) g = g.with_name(stem + "#" + std::to_string(graphs.size()));
    graphs.push_back(std::move(g));
  }
  return graphs;
}

std::vector<std::pair<std::string, std::vector<Graph>>> read_graph_directory(
    const std::filesystem::path& dir, const Graph6Options& options) {
  if (!std::filesystem::is_directory(dir)) throw ParseError(0, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".g6" || ext == ".json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, std::vector<Graph>>> out;
  for (const auto& f : files) out.emplace_back(f.stem().string(), read_graphs(f.string(), options));
  return out;
}

}  // namespace gsn
