#include "bench_runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <thread>

#include "mixtran/rng.hpp"

namespace mixtran::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct QueryOutcome {
  double seconds = 0.0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> pair_keys;  // sorted (t2, t3) lane-index pairs
  std::vector<double> head_rates;        // k smallest rates, ascending
};

std::uint64_t pair_key(const LaneIndex& index, const MixedTransport& mt) {
  const std::uint32_t a = *index.find_lane(mt.t2);
  const std::uint32_t b = *index.find_lane(mt.t3);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// k smallest values of `rates`, ascending.
std::vector<double> k_smallest(const std::vector<double>& rates, std::uint32_t k) {
  std::priority_queue<double> worst_on_top;
  for (double v : rates) {
    if (worst_on_top.size() < k)
      worst_on_top.push(v);
    else if (v < worst_on_top.top()) {
      worst_on_top.pop();
      worst_on_top.push(v);
    }
  }
  std::vector<double> out(worst_on_top.size());
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = worst_on_top.top();
    worst_on_top.pop();
  }
  return out;
}

std::vector<std::uint32_t> sample_queries(const LaneIndex& index, std::size_t n,
                                          std::uint64_t seed) {
  if (n > index.lane_count())
    throw std::invalid_argument("bench: more queries requested than lanes exist");
  std::vector<std::uint32_t> all(index.lane_count());
  std::iota(all.begin(), all.end(), 0u);
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < n; ++i) {  // partial Fisher-Yates
    const std::size_t j = i + uniform_below(gen, all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(n);
  return all;
}

}  // namespace

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Brute: return "brute";
    case Algo::Pruned: return "pruned";
    case Algo::Topk: return "topk";
  }
  return "?";
}

BenchReport run_bench(const LaneIndex& index, const BenchOptions& options) {
  BenchReport report;
  report.queries = options.queries;
  report.k = options.k;
  if (options.queries == 0) return report;

  const std::vector<std::uint32_t> queries =
      sample_queries(index, options.queries, options.seed);
  for (const std::uint32_t q : queries) report.query_lanes.push_back(index.lane(q).id);

  const bool has_brute =
      std::find(options.algorithms.begin(), options.algorithms.end(), Algo::Brute) !=
      options.algorithms.end();
  const bool has_pruned =
      std::find(options.algorithms.begin(), options.algorithms.end(), Algo::Pruned) !=
      options.algorithms.end();
  const bool has_topk =
      std::find(options.algorithms.begin(), options.algorithms.end(), Algo::Topk) !=
      options.algorithms.end();
  const bool keep_sets = has_brute && has_pruned;
  const bool keep_rates = has_topk && (has_brute || has_pruned);
  const Algo rate_reference = has_brute ? Algo::Brute : Algo::Pruned;

  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;

  const auto run_batch = [&](Algo algo, double r) {
    std::vector<QueryOutcome> slots(queries.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    const auto worker = [&] {
      try {
        for (;;) {
          const std::size_t qi = next.fetch_add(1);
          if (qi >= queries.size()) return;
          const std::uint32_t t1 = queries[qi];
          const auto t0 = Clock::now();
          std::vector<MixedTransport> found;
          switch (algo) {
            case Algo::Brute: found = brute_force_enumerate(index, t1, r); break;
            case Algo::Pruned: found = pruned_enumerate(index, t1, r); break;
            case Algo::Topk: found = topk_enumerate(index, t1, r, options.k); break;
          }
          const auto t1c = Clock::now();
          QueryOutcome& slot = slots[qi];
          slot.seconds = std::chrono::duration<double>(t1c - t0).count();
          slot.count = found.size();
          if (keep_sets && algo != Algo::Topk) {
            slot.pair_keys.reserve(found.size());
            for (const MixedTransport& mt : found) slot.pair_keys.push_back(pair_key(index, mt));
            std::sort(slot.pair_keys.begin(), slot.pair_keys.end());
          }
          if (keep_rates) {
            if (algo == Algo::Topk) {
              slot.head_rates.reserve(found.size());
              for (const MixedTransport& mt : found) slot.head_rates.push_back(mt.rate);
            } else if (algo == rate_reference) {
              std::vector<double> rates;
              rates.reserve(found.size());
              for (const MixedTransport& mt : found) rates.push_back(mt.rate);
              slot.head_rates = k_smallest(rates, options.k);
            }
          }
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(queries.size());
      }
    };

    const auto wall0 = Clock::now();
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      threads.reserve(jobs);
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
      for (std::thread& t : threads) t.join();
    }
    const double wall = std::chrono::duration<double>(Clock::now() - wall0).count();
    if (error) std::rethrow_exception(error);
    return std::pair<std::vector<QueryOutcome>, double>(std::move(slots), wall);
  };

  const auto note_failure = [&](double r, Algo algo, std::size_t qi, const std::string& what) {
    if (report.failed) return;
    report.failed = true;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "r=%.6f", r);
    report.first_difference = std::string(buf) + " algorithm=" + algo_name(algo) +
                              " query=" + report.query_lanes[qi] + ": " + what;
  };

  for (const double r : options.r_values) {
    std::vector<std::vector<QueryOutcome>> outcomes(options.algorithms.size());
    std::vector<double> walls(options.algorithms.size(), 0.0);
    for (std::size_t ai = 0; ai < options.algorithms.size(); ++ai) {
      auto [slots, wall] = run_batch(options.algorithms[ai], r);
      outcomes[ai] = std::move(slots);
      walls[ai] = wall;
    }

    const auto find_algo = [&](Algo a) -> const std::vector<QueryOutcome>* {
      for (std::size_t ai = 0; ai < options.algorithms.size(); ++ai)
        if (options.algorithms[ai] == a) return &outcomes[ai];
      return nullptr;
    };

    for (std::size_t ai = 0; ai < options.algorithms.size(); ++ai) {
      const Algo algo = options.algorithms[ai];
      const std::vector<QueryOutcome>& slots = outcomes[ai];

      BenchCell cell;
      cell.r = r;
      cell.algo = algo;
      cell.queries = queries.size();
      cell.wall_seconds = walls[ai];
      std::vector<double> times;
      times.reserve(slots.size());
      for (const QueryOutcome& s : slots) {
        cell.total_results += s.count;
        cell.sum_query_seconds += s.seconds;
        times.push_back(s.seconds);
      }
      std::sort(times.begin(), times.end());
      cell.min_query_seconds = times.front();
      cell.max_query_seconds = times.back();
      cell.median_query_seconds = times[times.size() / 2];

      cell.check = "-";
      if (algo == Algo::Pruned && keep_sets) {
        const std::vector<QueryOutcome>& reference = *find_algo(Algo::Brute);
        cell.check = "PASS";
        for (std::size_t qi = 0; qi < slots.size(); ++qi) {
          if (slots[qi].pair_keys != reference[qi].pair_keys) {
            cell.check = "FAIL";
            note_failure(r, algo, qi,
                         "result sets differ (brute " + std::to_string(reference[qi].count) +
                             " vs pruned " + std::to_string(slots[qi].count) + ")");
            break;
          }
        }
      } else if (algo == Algo::Topk && keep_rates) {
        const std::vector<QueryOutcome>& reference = *find_algo(rate_reference);
        cell.check = "PASS";
        for (std::size_t qi = 0; qi < slots.size(); ++qi) {
          if (slots[qi].head_rates != reference[qi].head_rates) {
            cell.check = "FAIL";
            note_failure(r, algo, qi, "top-k rates differ from " +
                                          std::string(algo_name(rate_reference)) +
                                          "'s k smallest");
            break;
          }
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

void write_report_csv(const std::filesystem::path& out, const BenchReport& report) {
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out.string());
  file << "r,algorithm,queries,total_results,check\n";
  char buf[64];
  for (const BenchCell& cell : report.cells) {
    std::snprintf(buf, sizeof(buf), "%.6f", cell.r);
    file << buf << "," << algo_name(cell.algo) << "," << cell.queries << ","
         << cell.total_results << "," << cell.check << "\n";
  }
  if (!file.flush()) throw std::runtime_error("write failed for " + out.string());
}

void write_timing_csv(const std::filesystem::path& out, const BenchReport& report) {
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out.string());
  file << "r,algorithm,queries,wall_seconds,sum_query_seconds,min_query_ms,median_query_ms,"
          "max_query_ms\n";
  char buf[256];
  for (const BenchCell& cell : report.cells) {
    std::snprintf(buf, sizeof(buf), "%.6f,%s,%zu,%.6f,%.6f,%.6f,%.6f,%.6f\n", cell.r,
                  algo_name(cell.algo), cell.queries, cell.wall_seconds,
                  cell.sum_query_seconds, cell.min_query_seconds * 1e3,
                  cell.median_query_seconds * 1e3, cell.max_query_seconds * 1e3);
    file << buf;
  }
  if (!file.flush()) throw std::runtime_error("write failed for " + out.string());
}

void print_timing_table(std::ostream& os, const BenchReport& report) {
  if (report.cells.empty()) {
    os << "no queries were run\n";
    return;
  }
  std::vector<double> rs;
  std::vector<Algo> algos;
  for (const BenchCell& cell : report.cells) {
    if (std::find(rs.begin(), rs.end(), cell.r) == rs.end()) rs.push_back(cell.r);
    if (std::find(algos.begin(), algos.end(), cell.algo) == algos.end())
      algos.push_back(cell.algo);
  }
  std::sort(rs.rbegin(), rs.rend());

  const auto cell_for = [&](double r, Algo a) -> const BenchCell* {
    for (const BenchCell& cell : report.cells)
      if (cell.r == r && cell.algo == a) return &cell;
    return nullptr;
  };
  const auto column_name = [&](Algo a) -> std::string {
    if (a == Algo::Topk) return "top-k(k=" + std::to_string(report.k) + ")";
    return a == Algo::Brute ? "brute-force" : "pruned";
  };

  char buf[64];
  os << "Wall-clock time to process " << report.queries << " matching requests (seconds)\n";
  os << " scenario \\ algorithm";
  for (const Algo a : algos) {
    std::snprintf(buf, sizeof(buf), " | %14s", column_name(a).c_str());
    os << buf;
  }
  os << "\n";
  for (const double r : rs) {
    std::snprintf(buf, sizeof(buf), " r = %.2f            ", r);
    os << buf;
    for (const Algo a : algos) {
      const BenchCell* cell = cell_for(r, a);
      if (cell)
        std::snprintf(buf, sizeof(buf), " | %14.3f", cell->wall_seconds);
      else
        std::snprintf(buf, sizeof(buf), " | %14s", "-");
      os << buf;
    }
    os << "\n";
  }

  const bool has_brute = std::find(algos.begin(), algos.end(), Algo::Brute) != algos.end();
  if (has_brute && algos.size() > 1) {
    os << "speedup vs brute-force\n";
    for (const double r : rs) {
      const BenchCell* base = cell_for(r, Algo::Brute);
      std::snprintf(buf, sizeof(buf), " r = %.2f            ", r);
      os << buf;
      for (const Algo a : algos) {
        const BenchCell* cell = cell_for(r, a);
        if (a == Algo::Brute || !cell || !base || cell->wall_seconds <= 0.0)
          std::snprintf(buf, sizeof(buf), " | %14s", "-");
        else
          std::snprintf(buf, sizeof(buf), " | %13.1fx", base->wall_seconds / cell->wall_seconds);
        os << buf;
      }
      os << "\n";
    }
  }
}

}  // namespace mixtran::cli
