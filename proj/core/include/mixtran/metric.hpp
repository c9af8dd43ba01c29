#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixtran {

/// Mean Earth radius used by the haversine mode.
inline constexpr double kEarthRadiusKm = 6371.0088;

enum class MetricMode { PlanarEuclidean, SphericalHaversine, ExplicitMatrix };

struct Base {
  std::string id;
  double x = 0.0;  ///< planar: x in km; spherical: latitude in degrees
  double y = 0.0;  ///< planar: y in km; spherical: longitude in degrees
};

/// Distance function d over the bases of one dataset, addressed by base
/// index. Immutable after construction and safe to share across threads.
///
/// All modes return kilometers and are deterministic: identical inputs
/// give bit-identical outputs. Planar and spherical modes are metrics by
/// construction; explicit matrices can be audited with validate_metric().
class MetricProvider {
public:
  MetricProvider() = default;

  static MetricProvider planar(const std::vector<Base>& bases);
  /// Validates latitude in [-90, 90] and longitude in [-180, 180].
  static MetricProvider spherical(const std::vector<Base>& bases);
  /// Row-major base_count x base_count matrix of kilometers. Negative
  /// entries and a wrong shape are always rejected; with enforce_axioms
  /// the constructor also rejects asymmetry and a nonzero diagonal.
  static MetricProvider matrix(std::vector<double> distances, std::size_t base_count,
                               bool enforce_axioms = true);

  MetricMode mode() const { return mode_; }
  std::size_t base_count() const { return count_; }

  /// Raw matrix entries (empty unless explicit-matrix mode).
  std::span<const double> matrix_data() const { return matrix_; }

  /// d(a, b) in kilometers.
  double operator()(std::uint32_t a, std::uint32_t b) const {
    if (a >= count_ || b >= count_)
      throw std::out_of_range("MetricProvider: base index out of range");
    switch (mode_) {
      case MetricMode::PlanarEuclidean: {
        const double dx = ca_[a] - ca_[b];
        const double dy = cb_[a] - cb_[b];
        return std::sqrt(dx * dx + dy * dy);
      }
      case MetricMode::SphericalHaversine: {
        // fabs keeps the call symmetric in (a, b) down to the last bit
        const double sp = std::sin(std::fabs(ca_[a] - ca_[b]) * 0.5);
        const double sl = std::sin(std::fabs(cb_[a] - cb_[b]) * 0.5);
        double h = sp * sp + cos_lat_[a] * cos_lat_[b] * (sl * sl);
        if (h > 1.0) h = 1.0;
        return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
      }
      case MetricMode::ExplicitMatrix:
      default:
        return matrix_[static_cast<std::size_t>(a) * count_ + b];
    }
  }

private:
  MetricProvider(MetricMode mode, std::size_t count) : mode_(mode), count_(count) {}

  MetricMode mode_ = MetricMode::PlanarEuclidean;
  std::size_t count_ = 0;
  std::vector<double> ca_, cb_;  // planar x/y in km, or lat/lon in radians
  std::vector<double> cos_lat_;  // spherical mode only
  std::vector<double> matrix_;   // explicit-matrix mode only
};

}  // namespace mixtran
