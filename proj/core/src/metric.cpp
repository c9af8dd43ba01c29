#include "mixtran/metric.hpp"

#include <numbers>

namespace mixtran {

MetricProvider MetricProvider::planar(const std::vector<Base>& bases) {
  MetricProvider m(MetricMode::PlanarEuclidean, bases.size());
  m.ca_.reserve(bases.size());
  m.cb_.reserve(bases.size());
  for (const Base& b : bases) {
    m.ca_.push_back(b.x);
    m.cb_.push_back(b.y);
  }
  return m;
}

MetricProvider MetricProvider::spherical(const std::vector<Base>& bases) {
  constexpr double deg = std::numbers::pi / 180.0;
  MetricProvider m(MetricMode::SphericalHaversine, bases.size());
  m.ca_.reserve(bases.size());
  m.cb_.reserve(bases.size());
  m.cos_lat_.reserve(bases.size());
  for (const Base& b : bases) {
    if (b.x < -90.0 || b.x > 90.0)
      throw std::invalid_argument("base '" + b.id + "': latitude out of [-90, 90]");
    if (b.y < -180.0 || b.y > 180.0)
      throw std::invalid_argument("base '" + b.id + "': longitude out of [-180, 180]");
    m.ca_.push_back(b.x * deg);
    m.cb_.push_back(b.y * deg);
    m.cos_lat_.push_back(std::cos(b.x * deg));
  }
  return m;
}

MetricProvider MetricProvider::matrix(std::vector<double> distances, std::size_t base_count,
                                      bool enforce_axioms) {
  if (distances.size() != base_count * base_count)
    throw std::invalid_argument("distance matrix is not base_count x base_count");
  for (double v : distances) {
    if (!(v >= 0.0))
      throw std::invalid_argument("distance matrix has a negative or non-finite entry");
  }
  if (enforce_axioms) {
    for (std::size_t i = 0; i < base_count; ++i) {
      if (distances[i * base_count + i] != 0.0)
        throw std::invalid_argument("distance matrix has a nonzero diagonal entry at index " +
                                    std::to_string(i));
      for (std::size_t j = i + 1; j < base_count; ++j) {
        if (distances[i * base_count + j] != distances[j * base_count + i])
          throw std::invalid_argument("distance matrix is asymmetric at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
      }
    }
  }
  MetricProvider m(MetricMode::ExplicitMatrix, base_count);
  m.matrix_ = std::move(distances);
  return m;
}

}  // namespace mixtran
