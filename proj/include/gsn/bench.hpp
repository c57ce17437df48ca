#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "gsn/catalog.hpp"
#include "gsn/graph.hpp"

namespace gsn {

struct BenchRecord {
  std::string graph_id;
  int n = 0;
  std::size_t m = 0;
  std::string family;
  int k = 0;
  double seconds = 0;  // median over repetitions
  std::uint64_t count = 0;
  int reps = 0;
  bool timed_out = false;
  /// Set when measured in --parallel throughput mode.
  bool comparable = true;
};

struct BenchOptions {
  int reps = 3;
  double timeout_secs = 60;
  bool warmup = true;
  /// Called after every timed repetition with its index; tests use it to
  /// inject an artificial delay into one repetition.
  std::function<void(int)> after_rep;
  /// Throughput mode: graphs are measured concurrently, records are marked
  /// non-comparable.
  bool parallel = false;
  int jobs = 0;
};

double median(std::vector<double> values);

/// One record per (graph, pattern). `count` is the number of distinct
/// subgraphs. Throws std::invalid_argument when reps < 3.
std::vector<BenchRecord> run_bench(const std::vector<Graph>& graphs, const Collection& c,
                                   const BenchOptions& options = {});

struct LogLogFit {
  double slope = 0;
  double intercept = 0;
  std::size_t points = 0;
};

/// Least-squares fit of log(seconds) against log(n), skipping timed-out
/// records and zero times.
LogLogFit fit_loglog(const std::vector<BenchRecord>& records);

/// Worst-case reference n^k scaled to pass through the first record.
std::vector<std::pair<int, double>> worst_case_curve(const std::vector<BenchRecord>& records, int k);

/// Columns: graph_id,n,m,family,k,seconds,count,reps,timed_out
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace gsn
