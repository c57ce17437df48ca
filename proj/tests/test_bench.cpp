#include <doctest.h>

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "gsn/bench.hpp"
#include "gsn/catalog.hpp"
#include "gsn/generators.hpp"
#include "gsn/iso.hpp"
#include "gsn/random.hpp"
#include "oracles.hpp"

using namespace gsn;

namespace {

Collection k4_collection() {
  return Collection({make_pattern(complete_graph(4), Family::clique)}, CountingMode::graphlet);
}

BenchRecord synthetic(int n, double seconds) {
  BenchRecord r;
  r.n = n;
  r.seconds = seconds;
  return r;
}

}  // namespace

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK_THROWS(median({}));
}

TEST_CASE("clique counts in complete graphs") {
  const Collection c = k4_collection();
  std::vector<Graph> graphs;
  for (int n = 5; n <= 12; ++n) graphs.push_back(complete_graph(n));
  const auto records = run_bench(graphs, c);
  REQUIRE(records.size() == graphs.size());
  for (const BenchRecord& r : records) {
    CHECK(r.count == static_cast<std::uint64_t>(oracle::binomial(r.n, 4)));
    CHECK(r.k == 4);
    CHECK(r.reps == 3);
    CHECK_FALSE(r.timed_out);
  }
  const auto empty = run_bench({empty_graph(10)}, c);
  CHECK(empty.front().count == 0);
  BenchOptions two;
  two.reps = 2;
  CHECK_THROWS_AS(run_bench(graphs, c, two), std::invalid_argument);
}

TEST_CASE("counts agree with a fresh count of distinct subgraphs") {
  Rng rng(401);
  const Collection c = family_collection(Family::cycle, 6, CountingMode::graphlet);
  std::vector<Graph> graphs;
  for (int i = 0; i < 4; ++i) graphs.push_back(random_gnm(30, 45, rng));
  BenchOptions o;
  o.parallel = true;
  o.jobs = 2;
  const auto records = run_bench(graphs, c, o);
  REQUIRE(records.size() == graphs.size() * c.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& p = c.patterns()[i % c.size()];
    CHECK(records[i].count == count_distinct_subgraphs(p.graph, graphs[i / c.size()]));
    CHECK_FALSE(records[i].comparable);
  }
}

TEST_CASE("the reported time is the median repetition") {
  BenchOptions o;
  o.reps = 3;
  o.warmup = false;
  o.after_rep = [](int rep) {
    if (rep == 1) std::this_thread::sleep_for(std::chrono::milliseconds(300));
  };
  const auto records = run_bench({cycle_graph(8)}, k4_collection(), o);
  CHECK(records.front().seconds < 0.15);
}

TEST_CASE("timeouts are flagged") {
  BenchOptions o;
  o.timeout_secs = 1e-9;
  o.warmup = false;
  const Collection c({make_pattern(cycle_graph(6), Family::cycle)}, CountingMode::motif);
  const auto records = run_bench({complete_graph(40)}, c, o);
  CHECK(records.front().timed_out);
  CHECK(records.front().seconds == doctest::Approx(1e-9));
}

TEST_CASE("log-log fit and reference curve") {
  std::vector<BenchRecord> records;
  for (int n : {50, 100, 200, 400, 800}) records.push_back(synthetic(n, 2e-7 * std::pow(n, 1.5)));
  BenchRecord late = synthetic(1600, 60);
  late.timed_out = true;
  records.push_back(late);
  const LogLogFit fit = fit_loglog(records);
  CHECK(fit.points == 5);
  CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(std::exp(fit.intercept) == doctest::Approx(2e-7).epsilon(1e-6));

  const auto curve = worst_case_curve(records, 4);
  REQUIRE(curve.size() == records.size());
  CHECK(curve.front().second == doctest::Approx(records.front().seconds));
  CHECK(curve[1].second / curve[0].second == doctest::Approx(16.0));
  CHECK(fit_loglog({}).points == 0);
}

TEST_CASE("bench CSV") {
  BenchRecord r = synthetic(10, 0.5);
  r.graph_id = "g";
  r.m = 12;
  r.family = "cycle";
  r.k = 4;
  r.count = 3;
  r.reps = 3;
  std::ostringstream out;
  write_bench_csv(out, {r});
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "graph_id,n,m,family,k,seconds,count,reps,timed_out");
  CHECK(row.rfind("g,10,12,cycle,4,", 0) == 0);
}
