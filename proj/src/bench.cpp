#include "gsn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gsn/iso.hpp"
#include "gsn/parallel.hpp"

namespace gsn {

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of no values");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

BenchRecord measure(const Graph& g, const SubstructurePattern& p, const Collection& c,
                    const BenchOptions& options) {
  using clock = std::chrono::steady_clock;
  BenchRecord r;
  r.graph_id = g.name();
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.family = to_string(p.family);
  r.k = p.size;
  r.reps = options.reps;
  const MatchOptions mo = c.match_options();
  auto count_once = [&](clock::time_point deadline) {
    MatchOptions timed = mo;
    timed.deadline = deadline;
    std::uint64_t matches = 0;
    PatternMatcher(p.graph, timed).for_each(g, [&](std::span<const Vertex>) { ++matches; });
    return matches / p.orbits.aut_size;
  };
  const auto budget = std::chrono::duration_cast<clock::duration>(
      std::chrono::duration<double>(options.timeout_secs));
  try {
    if (options.warmup) count_once(clock::now() + budget);
    std::vector<double> times;
    for (int rep = 0; rep < options.reps; ++rep) {
      const auto t0 = clock::now();
      r.count = count_once(t0 + budget);
      if (options.after_rep) options.after_rep(rep);
      times.push_back(std::chrono::duration<double>(clock::now() - t0).count());
    }
    r.seconds = median(times);
  } catch (const MatchTimeout&) {
    r.timed_out = true;
    r.seconds = options.timeout_secs;
    r.count = 0;
  }
  return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<Graph>& graphs, const Collection& c,
                                   const BenchOptions& options) {
  if (options.reps < 3) throw std::invalid_argument("bench needs at least 3 repetitions");
  std::vector<BenchRecord> out(graphs.size() * c.size());
  auto job = [&](std::size_t idx) {
    const std::size_t gi = idx / c.size();
    const std::size_t pi = idx % c.size();
    out[idx] = measure(graphs[gi], c.patterns()[pi], c, options);
    out[idx].comparable = !options.parallel;
  };
  if (options.parallel) {
    parallel_for(out.size(), options.jobs, job);
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) job(i);
  }
  return out;
}

LogLogFit fit_loglog(const std::vector<BenchRecord>& records) {
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    if (r.timed_out || r.seconds <= 0 || r.n <= 0) continue;
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.seconds));
  }
  LogLogFit fit;
  fit.points = xs.size();
  if (xs.size() < 2) return fit;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

std::vector<std::pair<int, double>> worst_case_curve(const std::vector<BenchRecord>& records,
                                                     int k) {
  std::vector<std::pair<int, double>> curve;
  const BenchRecord* first = nullptr;
  for (const auto& r : records) {
    if (!r.timed_out && r.seconds > 0) {
      first = &r;
      break;
    }
  }
  if (first == nullptr) return curve;
  const double scale = first->seconds / std::pow(static_cast<double>(first->n), k);
  for (const auto& r : records) curve.emplace_back(r.n, scale * std::pow(static_cast<double>(r.n), k));
  return curve;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "graph_id,n,m,family,k,seconds,count,reps,timed_out\n";
  for (const auto& r : records) {
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.family << ',' << r.k << ','
        << r.seconds << ',' << r.count << ',' << r.reps << ',' << (r.timed_out ? "true" : "false")
        << '\n';
  }
}

}  // namespace gsn
