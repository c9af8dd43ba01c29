#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixtran/engine.hpp"
#include "mixtran/lane_index.hpp"

namespace mixtran::cli {

enum class Algo { Brute, Pruned, Topk };

const char* algo_name(Algo a);

struct BenchOptions {
  std::vector<double> r_values;
  std::vector<Algo> algorithms;
  std::size_t queries = 0;
  std::uint64_t seed = 1;
  std::uint32_t k = 10;        // top-k only
  unsigned jobs = 0;           // 0 = hardware concurrency
};

struct BenchCell {
  double r = 0.0;
  Algo algo = Algo::Pruned;
  std::size_t queries = 0;
  std::uint64_t total_results = 0;
  std::string check;           // PASS, FAIL, or "-" when nothing to compare against
  double wall_seconds = 0.0;
  double sum_query_seconds = 0.0;
  double min_query_seconds = 0.0;
  double median_query_seconds = 0.0;
  double max_query_seconds = 0.0;
};

struct BenchReport {
  std::size_t queries = 0;
  std::uint32_t k = 10;
  std::vector<std::string> query_lanes;  // sampled t1 ids, in batch order
  std::vector<BenchCell> cells;          // r-major, algorithm order as requested
  bool failed = false;
  std::string first_difference;
};

/// Samples `queries` distinct lanes (deterministic in the seed), fixes
/// each as t1, and times every requested algorithm at every r over the
/// whole batch. Queries of one cell may run concurrently (`jobs`);
/// results are merged by query position, so the report content does not
/// depend on the thread count. Result sets are cross-checked between
/// algorithms: pruned against brute-force when both ran, and top-k's
/// rate list against the best available reference.
BenchReport run_bench(const LaneIndex& index, const BenchOptions& options);

/// Deterministic part of the report: one row per cell, no timings.
void write_report_csv(const std::filesystem::path& out, const BenchReport& report);

/// Timing rows, including per-query distribution columns.
void write_timing_csv(const std::filesystem::path& out, const BenchReport& report);

/// Scenario-by-algorithm wall-clock table, largest r first.
void print_timing_table(std::ostream& os, const BenchReport& report);

}  // namespace mixtran::cli
