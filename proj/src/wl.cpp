#include "gsn/wl.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

namespace gsn {

int ColorContext::intern(const std::vector<std::int64_t>& key) {
  auto [it, inserted] = table_.try_emplace(key, static_cast<int>(table_.size()));
  return it->second;
}

Histogram make_histogram(const std::vector<int>& colors) {
  std::map<int, std::int64_t> counts;
  for (int c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

namespace {

int distinct_colors(const std::vector<std::vector<int>>& colorings) {
  std::set<int> all;
  for (const auto& c : colorings) all.insert(c.begin(), c.end());
  return static_cast<int>(all.size());
}

std::vector<Coloring> finish(std::vector<std::vector<int>> colors, int rounds,
                             const std::vector<int>& history) {
  std::vector<Coloring> out;
  for (auto& c : colors) {
    Coloring col;
    col.histogram = make_histogram(c);
    col.colors = std::move(c);
    col.rounds = rounds;
    col.history = history;
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

std::vector<Coloring> wl1_refine_jointly(
    const std::vector<const Graph*>& graphs,
    const std::vector<std::vector<std::vector<std::int64_t>>>* initial,
    const WLOptions& options) {
  ColorContext ctx;
  std::vector<std::vector<int>> colors(graphs.size());
  int max_n = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = *graphs[i];
    max_n = std::max(max_n, g.num_vertices());
    if (initial && (*initial)[i].size() != static_cast<std::size_t>(g.num_vertices())) {
      throw std::invalid_argument("initial colours must have one entry per vertex");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<std::int64_t> key{-1};
      if (initial) {
        const auto& raw = (*initial)[i][v];
        key.insert(key.end(), raw.begin(), raw.end());
      } else {
        key.push_back(g.vertex_label(v));
      }
      colors[i].push_back(ctx.intern(key));
    }
  }
  int count = distinct_colors(colors);
  std::vector<int> history{count};
  int rounds = 0;
  // A partition of at most max_n cells per graph can refine at most max_n
  // times; one extra round confirms stability.
  while (rounds <= max_n) {
    std::vector<std::vector<int>> next(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = *graphs[i];
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> neigh;
        for (Vertex u : g.neighbors(v)) {
          neigh.emplace_back(colors[i][u], options.use_edge_labels ? g.edge_label(u, v) : 0);
        }
        std::sort(neigh.begin(), neigh.end());
        std::vector<std::int64_t> key{colors[i][v]};
        for (const auto& [c, label] : neigh) {
          key.push_back(c);
          if (options.use_edge_labels) key.push_back(label);
        }
        next[i].push_back(ctx.intern(key));
      }
    }
    ++rounds;
    const int next_count = distinct_colors(next);
    history.push_back(next_count);
    colors = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return finish(std::move(colors), rounds, history);
}

Coloring wl1_refine(const Graph& g,
                    const std::optional<std::vector<std::vector<std::int64_t>>>& initial,
                    const WLOptions& options) {
  std::vector<std::vector<std::vector<std::int64_t>>> init;
  if (initial) init.push_back(*initial);
  return wl1_refine_jointly({&g}, initial ? &init : nullptr, options).front();
}

std::vector<Coloring> kfwl_refine_jointly(const std::vector<const Graph*>& graphs, int k,
                                          const WLOptions& options) {
  if (k != 2 && k != 3) throw std::invalid_argument("k-FWL supports k = 2 or 3");
  const int cap = k == 2 ? options.max_n_fwl2 : options.max_n_fwl3;
  for (const Graph* g : graphs) {
    if (g->num_vertices() > cap) {
      throw std::invalid_argument(std::to_string(k) + "-FWL is capped at n = " +
                                  std::to_string(cap) + "; graph has " +
                                  std::to_string(g->num_vertices()));
    }
  }
  ColorContext ctx;
  std::vector<std::vector<int>> colors(graphs.size());
  std::int64_t max_tuples = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi];
    const int n = g.num_vertices();
    const std::int64_t total = k == 2 ? std::int64_t{n} * n : std::int64_t{n} * n * n;
    max_tuples = std::max(max_tuples, total);
    colors[gi].resize(total);
    std::vector<int> t(k);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t rest = idx;
      for (int p = k - 1; p >= 0; --p) {
        t[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      // Isomorphism type: labels, then equality and adjacency per pair.
      std::vector<std::int64_t> key{-1};
      for (int p = 0; p < k; ++p) key.push_back(g.vertex_label(t[p]));
      for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
          key.push_back(t[p] == t[q] ? 2 : (g.adjacent(t[p], t[q]) ? 1 : 0));
          if (options.use_edge_labels && g.adjacent(t[p], t[q])) {
            key.push_back(g.edge_label(t[p], t[q]));
          }
        }
      }
      colors[gi][idx] = ctx.intern(key);
    }
  }
  int count = distinct_colors(colors);
  std::vector<int> history{count};
  int rounds = 0;
  while (rounds <= max_tuples) {
    std::vector<std::vector<int>> next(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const int n = graphs[gi]->num_vertices();
      const auto& c = colors[gi];
      next[gi].resize(c.size());
      std::vector<std::int64_t> multiset;
      for (std::size_t idx = 0; idx < c.size(); ++idx) {
        multiset.clear();
        if (k == 2) {
          const int a = static_cast<int>(idx / n);
          const int b = static_cast<int>(idx % n);
          for (int u = 0; u < n; ++u) {
            // (c(u, b), c(a, u)) packed into one integer
            multiset.push_back(std::int64_t{c[u * n + b]} << 32 | c[a * n + u]);
          }
          std::sort(multiset.begin(), multiset.end());
          std::vector<std::int64_t> key{c[idx]};
          key.insert(key.end(), multiset.begin(), multiset.end());
          next[gi][idx] = ctx.intern(key);
        } else {
          const int a = static_cast<int>(idx / (n * n));
          const int b = static_cast<int>(idx / n % n);
          const int d = static_cast<int>(idx % n);
          std::vector<std::array<int, 3>> triples;
          for (int u = 0; u < n; ++u) {
            triples.push_back({c[(u * n + b) * n + d], c[(a * n + u) * n + d],
                               c[(a * n + b) * n + u]});
          }
          std::sort(triples.begin(), triples.end());
          std::vector<std::int64_t> key{c[idx]};
          for (const auto& tr : triples) key.insert(key.end(), tr.begin(), tr.end());
          next[gi][idx] = ctx.intern(key);
        }
      }
    }
    ++rounds;
    const int next_count = distinct_colors(next);
    history.push_back(next_count);
    colors = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return finish(std::move(colors), rounds, history);
}

Coloring kfwl_refine(const Graph& g, int k, const WLOptions& options) {
  return kfwl_refine_jointly({&g}, k, options).front();
}

WLTest parse_wl_test(std::string_view name) {
  if (name == "wl1" || name == "1wl" || name == "1-wl") return WLTest::wl1;
  if (name == "fwl2" || name == "2fwl" || name == "2-fwl") return WLTest::fwl2;
  if (name == "fwl3" || name == "3fwl" || name == "3-fwl") return WLTest::fwl3;
  throw std::invalid_argument("unknown WL test: " + std::string(name));
}

std::string to_string(WLTest t) {
  switch (t) {
    case WLTest::wl1: return "wl1";
    case WLTest::fwl2: return "fwl2";
    case WLTest::fwl3: return "fwl3";
  }
  return "wl1";
}

std::vector<Histogram> wl_histograms(const std::vector<const Graph*>& graphs, WLTest test,
                                     const WLOptions& options) {
  std::vector<Coloring> cols = test == WLTest::wl1
                                   ? wl1_refine_jointly(graphs, nullptr, options)
                                   : kfwl_refine_jointly(graphs, test == WLTest::fwl2 ? 2 : 3,
                                                         options);
  std::vector<Histogram> out;
  for (auto& c : cols) out.push_back(std::move(c.histogram));
  return out;
}

bool wl_distinguish(const Graph& a, const Graph& b, WLTest test, const WLOptions& options) {
  if (a.num_vertices() != b.num_vertices()) return true;
  const auto h = wl_histograms({&a, &b}, test, options);
  return h[0] != h[1];
}

}  // namespace gsn
