#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mixtran/metric.hpp"

namespace mixtran {

/// A truckload request from one base to another. `dist` is always the
/// value computed by the dataset's MetricProvider for (start, end) and is
/// strictly positive.
struct Lane {
  std::string id;
  std::uint32_t start = 0;  ///< base index
  std::uint32_t end = 0;    ///< base index
  double dist = 0.0;        ///< km
};

/// A three-lane mixed transport (t1, t2, t3): one truck loads in that
/// order, unloads in reverse, and drives
/// t1.start -> t2.start -> t3.start -> t3.end -> t2.end -> t1.end.
struct MixedTransport {
  std::string t1, t2, t3;        ///< lane ids, pairwise distinct
  double x1 = 0.0, x2 = 0.0;     ///< start-to-start hop distances
  double z1 = 0.0, z2 = 0.0;     ///< end-to-end hop distances
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;  ///< lane lengths
  double rate = 0.0;             ///< reduction rate, >= 1/3 on a metric
};

/// One matching request: a fixed first lane, a rate threshold, and the
/// optional result cap for top-k runs.
struct Query {
  std::uint32_t t1 = 0;  ///< lane index
  double r = 0.0;
  std::optional<std::uint32_t> k;
};

/// Numerator and denominator of the reduction rate,
/// (x1 + x2 + d3 + z2 + z1) / (d1 + d2 + d3).
///
/// Every enumeration route assembles the two sums here, with one fixed
/// evaluation order, and tests the threshold by cross-multiplication.
/// That keeps accept decisions bit-identical between the brute-force and
/// pruned searches and keeps division out of the hot path.
struct RateParts {
  double num = 0.0;
  double den = 0.0;
};

inline RateParts rate_parts(double d1, double d2, double d3, double x1, double x2,
                            double z1, double z2) {
  return {x1 + x2 + d3 + z2 + z1, d1 + d2 + d3};
}

/// rate <= r, evaluated as num <= r * den (den > 0 always holds here).
inline bool rate_within(RateParts p, double r) { return p.num <= r * p.den; }

/// Thresholds live in [1/3, 1): 1/3 is the rate of three fully
/// coincident lanes and 1 means no saving at all.
inline bool valid_rate_threshold(double r) { return r >= 1.0 / 3.0 && r < 1.0; }

/// Evaluates the mixed transport (t1, t2, t3) and returns it fully
/// populated. Throws std::invalid_argument if the lane ids are not
/// pairwise distinct.
MixedTransport reduction_rate(const Lane& t1, const Lane& t2, const Lane& t3,
                              const MetricProvider& metric);

}  // namespace mixtran
