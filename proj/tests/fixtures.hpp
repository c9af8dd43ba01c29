#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mixtran/dataset.hpp"
#include "mixtran/engine.hpp"
#include "mixtran/lane_index.hpp"

namespace fixtures {

/// Six collinear bases, three nested lanes on the x axis:
///   L1: (0,0)->(10,0), L2: (1,0)->(9,0), L3: (2,0)->(8,0).
/// (L1,L2,L3) has rate 10/24, (L1,L3,L2) has rate 14/24.
inline mixtran::Dataset nested_lanes() {
  mixtran::Dataset ds;
  ds.bases = {{"A", 0, 0}, {"B", 10, 0}, {"C", 1, 0},
              {"D", 9, 0}, {"E", 2, 0}, {"F", 8, 0}};
  ds.metric = mixtran::MetricProvider::planar(ds.bases);
  const auto lane = [&](const char* id, std::uint32_t s, std::uint32_t e) {
    return mixtran::Lane{id, s, e, ds.metric(s, e)};
  };
  ds.lanes = {lane("L1", 0, 1), lane("L2", 2, 3), lane("L3", 4, 5)};
  return ds;
}

/// Sorted (t2, t3) id pairs; sorted-vector form so accidental duplicate
/// emissions are caught by comparisons too.
inline std::vector<std::pair<std::string, std::string>> partner_pairs(
    const std::vector<mixtran::MixedTransport>& transports) {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(transports.size());
  for (const auto& mt : transports) pairs.emplace_back(mt.t2, mt.t3);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

inline std::vector<double> sorted_rates(const std::vector<mixtran::MixedTransport>& transports) {
  std::vector<double> rates;
  rates.reserve(transports.size());
  for (const auto& mt : transports) rates.push_back(mt.rate);
  std::sort(rates.begin(), rates.end());
  return rates;
}

/// Independent reference enumerator for planar datasets: recomputes every
/// distance from raw coordinates with its own arithmetic and compares the
/// rate by division. Deliberately shares no code with the library path.
inline std::vector<std::pair<std::string, std::string>> naive_qualifying(
    const mixtran::Dataset& ds, std::size_t t1, double r) {
  const auto dist = [&](std::uint32_t a, std::uint32_t b) {
    return std::hypot(ds.bases[a].x - ds.bases[b].x, ds.bases[a].y - ds.bases[b].y);
  };
  const auto& lanes = ds.lanes;
  std::vector<std::pair<std::string, std::string>> found;
  for (std::size_t t2 = 0; t2 < lanes.size(); ++t2) {
    if (t2 == t1) continue;
    for (std::size_t t3 = 0; t3 < lanes.size(); ++t3) {
      if (t3 == t1 || t3 == t2) continue;
      const double num = dist(lanes[t1].start, lanes[t2].start) +
                         dist(lanes[t2].start, lanes[t3].start) +
                         dist(lanes[t3].start, lanes[t3].end) +
                         dist(lanes[t3].end, lanes[t2].end) +
                         dist(lanes[t2].end, lanes[t1].end);
      const double den = dist(lanes[t1].start, lanes[t1].end) +
                         dist(lanes[t2].start, lanes[t2].end) +
                         dist(lanes[t3].start, lanes[t3].end);
      if (num / den <= r) found.emplace_back(lanes[t2].id, lanes[t3].id);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace fixtures
