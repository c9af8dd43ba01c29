#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mixtran/model.hpp"

namespace mixtran {

/// A validated, immutable problem instance: every lane references known
/// bases, every lane distance was computed by `metric`, and no lane has
/// zero length.
struct Dataset {
  std::vector<Base> bases;
  std::vector<Lane> lanes;
  MetricProvider metric;
};

/// Reads bases.csv and lanes.csv (see README for the formats) and builds
/// a Dataset. Lane distances are always recomputed from the metric; a
/// distance column in lanes.csv is ignored with a warning on stderr.
///
/// For MetricMode::ExplicitMatrix, `matrix_file` names the |B| x |B|
/// matrix in base-file order. With enforce_matrix_axioms=false an
/// asymmetric or nonzero-diagonal matrix is accepted as-is (pruned
/// results may then be incomplete; the CLI warns about this).
///
/// Throws std::runtime_error with "<file>:<line>:" context on parse
/// errors, duplicate ids, unknown bases, and zero-length lanes.
Dataset load_dataset(const std::filesystem::path& bases_file,
                     const std::filesystem::path& lanes_file, MetricMode mode,
                     const std::filesystem::path& matrix_file = {},
                     bool enforce_matrix_axioms = true);

/// Writes the dataset back out in the load_dataset formats. Coordinates
/// use shortest round-trip formatting, so load_dataset(write(D)) == D.
/// `matrix_file` is required for explicit-matrix datasets.
void write_dataset(const Dataset& dataset, const std::filesystem::path& bases_file,
                   const std::filesystem::path& lanes_file,
                   const std::filesystem::path& matrix_file = {});

/// Planar instance with `n_bases` points uniform over a width x height
/// km rectangle and `n_lanes` lanes over uniformly drawn pairs of
/// distinct bases. Fully determined by the seed. Requires n_bases >= 2
/// and n_lanes >= 1.
Dataset generate_synthetic(std::size_t n_bases, std::size_t n_lanes, std::uint64_t seed,
                           double width_km, double height_km);

struct MetricViolation {
  enum class Kind { Negative, NonzeroDiagonal, Asymmetry, Triangle };
  Kind kind;
  std::uint32_t a = 0, b = 0, c = 0;  ///< base indices involved
  double lhs = 0.0, rhs = 0.0;        ///< offending comparison, lhs vs rhs
  std::string describe() const;
};

/// Audits an explicit distance matrix against the metric axioms:
/// negative entries, nonzero diagonal, asymmetry, and triangle-inequality
/// violations d(a,c) > d(a,b) + d(b,c). Symmetry/diagonal/sign checks are
/// exhaustive; triangle checks are exhaustive when base_count^3 <=
/// sample_budget and randomly sampled (deterministically) otherwise.
/// An empty result means no violation was found. Throws
/// std::invalid_argument if the matrix is not base_count x base_count.
std::vector<MetricViolation> validate_metric(std::span<const double> matrix,
                                             std::size_t base_count,
                                             std::size_t sample_budget);

}  // namespace mixtran
