#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench_runner.hpp"
#include "mixtran/dataset.hpp"
#include "mixtran/engine.hpp"
#include "mixtran/lane_index.hpp"
#include "result_io.hpp"

namespace {

using namespace mixtran;
using namespace mixtran::cli;

// exit codes: 0 success, 1 runtime/verification failure, 2 usage error
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetArgs {
  std::string bases;
  std::string lanes;
  std::string matrix;
  std::string metric = "euclidean";
  bool force = false;
  std::size_t sample_budget = 1'000'000;
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("--bases", args.bases, "bases.csv path")->required();
  cmd->add_option("--lanes", args.lanes, "lanes.csv path")->required();
  cmd->add_option("--metric", args.metric, "distance mode")
      ->check(CLI::IsMember({"euclidean", "haversine", "matrix"}))
      ->capture_default_str();
  cmd->add_option("--matrix", args.matrix, "matrix.csv path (required for --metric matrix)");
  cmd->add_flag("--force", args.force,
                "keep going when an explicit matrix fails the metric audit");
}

MetricMode mode_of(const std::string& name) {
  if (name == "euclidean") return MetricMode::PlanarEuclidean;
  if (name == "haversine") return MetricMode::SphericalHaversine;
  return MetricMode::ExplicitMatrix;
}

/// Loads the dataset; for explicit matrices also audits the metric
/// axioms and refuses a failing matrix unless --force was given (the
/// pruning bounds assume a metric, so results may be incomplete then).
Dataset load_checked(const DatasetArgs& args) {
  const MetricMode mode = mode_of(args.metric);
  if (mode == MetricMode::ExplicitMatrix && args.matrix.empty())
    throw UsageError("--metric matrix requires --matrix FILE");
  Dataset ds = load_dataset(args.bases, args.lanes, mode, args.matrix,
                            /*enforce_matrix_axioms=*/false);
  if (mode == MetricMode::ExplicitMatrix) {
    const auto violations =
        validate_metric(ds.metric.matrix_data(), ds.metric.base_count(), args.sample_budget);
    if (!violations.empty()) {
      if (!args.force)
        throw std::runtime_error("distance matrix violates the metric axioms (" +
                                 std::to_string(violations.size()) + " finding(s); first: " +
                                 violations.front().describe() +
                                 "); rerun with --force to search anyway");
      std::cerr << "warning: distance matrix violates the metric axioms ("
                << violations.size()
                << " finding(s)); pruned results may be incomplete\n";
    }
  }
  return ds;
}

double checked_rate(double r) {
  if (!valid_rate_threshold(r))
    throw UsageError("reduction rate r must lie in [1/3, 1)");
  return r;
}

std::uint32_t checked_lane(const LaneIndex& index, const std::string& id) {
  const auto lane = index.find_lane(id);
  if (!lane) throw UsageError("unknown lane id '" + id + "'");
  return *lane;
}

int run_generate(std::size_t n_bases, std::size_t n_lanes, std::uint64_t seed, double width,
                 double height, const std::string& out_dir) {
  if (n_bases < 2) throw UsageError("--bases must be at least 2");
  if (n_lanes < 1) throw UsageError("--lanes must be at least 1");
  if (!(width > 0.0) || !(height > 0.0)) throw UsageError("--width/--height must be positive");
  const Dataset ds = generate_synthetic(n_bases, n_lanes, seed, width, height);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_dataset(ds, dir / "bases.csv", dir / "lanes.csv");
  std::cout << "wrote " << (dir / "bases.csv").string() << " (" << ds.bases.size()
            << " bases) and " << (dir / "lanes.csv").string() << " (" << ds.lanes.size()
            << " lanes)\n";
  return 0;
}

int run_validate(const DatasetArgs& args) {
  const MetricMode mode = mode_of(args.metric);
  if (mode != MetricMode::ExplicitMatrix) {
    const Dataset ds = load_checked(args);
    std::cout << "dataset is valid: " << ds.bases.size() << " bases, " << ds.lanes.size()
              << " lanes; " << args.metric << " distances satisfy the metric axioms"
              << " by construction\n";
    return 0;
  }
  if (args.matrix.empty()) throw UsageError("--metric matrix requires --matrix FILE");
  const Dataset ds = load_dataset(args.bases, args.lanes, mode, args.matrix,
                                  /*enforce_matrix_axioms=*/false);
  const auto violations =
      validate_metric(ds.metric.matrix_data(), ds.metric.base_count(), args.sample_budget);
  if (violations.empty()) {
    std::cout << "no metric violation found (triangle check budget " << args.sample_budget
              << ")\n";
    return 0;
  }
  std::cout << violations.size() << " metric violation(s) found:\n";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 50);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "  " << violations[i].describe() << "\n";
  if (shown < violations.size())
    std::cout << "  ... and " << violations.size() - shown << " more\n";
  return 1;
}

int run_search(const DatasetArgs& args, const std::string& lane_id, double r,
               const std::string& algorithm, std::uint32_t k, bool topk,
               const std::string& out) {
  checked_rate(r);
  if (topk && k < 1) throw UsageError("--k must be at least 1");
  const Dataset ds = load_checked(args);
  const LaneIndex index(ds);
  const std::uint32_t t1 = checked_lane(index, lane_id);

  std::vector<MixedTransport> found;
  if (topk)
    found = topk_enumerate(index, t1, r, k);
  else if (algorithm == "brute")
    found = brute_force_enumerate(index, t1, r);
  else
    found = pruned_enumerate(index, t1, r);

  sort_for_output(found);
  write_transports_csv(out, found);
  std::cout << "wrote " << found.size() << " mixed transport(s) to " << out << "\n";
  return 0;
}

int run_bench_cmd(const DatasetArgs& args, BenchOptions options, bool k_given,
                  const std::string& out, const std::string& timing_out) {
  for (const double r : options.r_values) checked_rate(r);
  const bool wants_topk =
      std::find(options.algorithms.begin(), options.algorithms.end(), Algo::Topk) !=
      options.algorithms.end();
  if (wants_topk && !k_given) throw UsageError("--algorithms topk requires --k");
  if (k_given && options.k < 1) throw UsageError("--k must be at least 1");

  const Dataset ds = load_checked(args);
  const LaneIndex index(ds);
  if (options.queries > index.lane_count())
    throw UsageError("--queries exceeds the number of lanes in the dataset");

  const BenchReport report = run_bench(index, options);
  write_report_csv(out, report);
  if (!timing_out.empty()) write_timing_csv(timing_out, report);
  print_timing_table(std::cout, report);
  if (report.failed) {
    std::cerr << "error: cross-check FAILED: " << report.first_difference << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumerate three-lane mixed transports with a reduction rate at or below a "
               "threshold"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a seeded synthetic planar dataset");
  std::size_t gen_bases = 0, gen_lanes = 0;
  std::uint64_t gen_seed = 1;
  double gen_width = 100.0, gen_height = 100.0;
  std::string gen_out_dir;
  gen->add_option("--bases", gen_bases, "number of bases (>= 2)")->required();
  gen->add_option("--lanes", gen_lanes, "number of lanes (>= 1)")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("--width", gen_width, "region width in km")->capture_default_str();
  gen->add_option("--height", gen_height, "region height in km")->capture_default_str();
  gen->add_option("--out-dir", gen_out_dir, "output directory")->required();

  // validate
  auto* val = app.add_subcommand("validate", "check a dataset and audit matrix metric axioms");
  DatasetArgs val_args;
  add_dataset_options(val, val_args);
  val->add_option("--sample-budget", val_args.sample_budget,
                  "triangle-inequality checks to spend (exhaustive if |B|^3 fits)")
      ->capture_default_str();

  // enumerate
  auto* enu = app.add_subcommand("enumerate",
                                 "list all mixed transports for one lane at threshold r");
  DatasetArgs enu_args;
  add_dataset_options(enu, enu_args);
  std::string enu_lane, enu_algorithm = "pruned", enu_out;
  double enu_r = 0.5;
  enu->add_option("--lane", enu_lane, "first lane id (t1)")->required();
  enu->add_option("--r", enu_r, "reduction-rate threshold in [1/3, 1)")->required();
  enu->add_option("--algorithm", enu_algorithm, "search route")
      ->check(CLI::IsMember({"pruned", "brute"}))
      ->capture_default_str();
  enu->add_option("--out", enu_out, "result CSV path")->required();

  // topk
  auto* top = app.add_subcommand("topk", "list the k best mixed transports for one lane");
  DatasetArgs top_args;
  add_dataset_options(top, top_args);
  std::string top_lane, top_out;
  double top_r = 0.5;
  std::uint32_t top_k = 0;
  top->add_option("--lane", top_lane, "first lane id (t1)")->required();
  top->add_option("--r", top_r, "reduction-rate threshold in [1/3, 1)")->required();
  top->add_option("--k", top_k, "number of results to keep (>= 1)")->required();
  top->add_option("--out", top_out, "result CSV path")->required();

  // bench
  auto* ben = app.add_subcommand("bench", "time the algorithms over a batch of requests");
  DatasetArgs ben_args;
  add_dataset_options(ben, ben_args);
  BenchOptions ben_options;
  ben_options.r_values = {0.35, 0.40, 0.45, 0.50, 0.55, 0.60};
  std::vector<std::string> ben_algos = {"pruned"};
  std::string ben_out, ben_timing_out;
  ben->add_option("--queries", ben_options.queries, "number of matching requests")->required();
  ben->add_option("--r-values", ben_options.r_values, "thresholds to sweep")
      ->delimiter(',')
      ->capture_default_str();
  ben->add_option("--algorithms", ben_algos, "algorithms to run (brute,pruned,topk)")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "pruned", "topk"}))
      ->capture_default_str();
  auto* ben_k_opt = ben->add_option("--k", ben_options.k, "k for the topk algorithm");
  ben->add_option("--seed", ben_options.seed, "query-sampling seed")->capture_default_str();
  ben->add_option("--jobs", ben_options.jobs,
                  "worker threads per batch (0 = all cores, 1 = sequential)")
      ->capture_default_str();
  ben->add_option("--out", ben_out, "report CSV path (deterministic, no timings)")->required();
  ben->add_option("--timing-out", ben_timing_out, "timing CSV path (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return run_generate(gen_bases, gen_lanes, gen_seed, gen_width, gen_height, gen_out_dir);
    if (val->parsed()) return run_validate(val_args);
    if (enu->parsed())
      return run_search(enu_args, enu_lane, enu_r, enu_algorithm, 0, false, enu_out);
    if (top->parsed()) return run_search(top_args, top_lane, top_r, "", top_k, true, top_out);
    if (ben->parsed()) {
      for (const std::string& name : ben_algos)
        ben_options.algorithms.push_back(name == "brute"    ? Algo::Brute
                                         : name == "pruned" ? Algo::Pruned
                                                            : Algo::Topk);
      return run_bench_cmd(ben_args, ben_options, ben_k_opt->count() > 0, ben_out,
                           ben_timing_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
