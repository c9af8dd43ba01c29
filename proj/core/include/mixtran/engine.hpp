#pragma once

#include <cstdint>
#include <vector>

#include "mixtran/lane_index.hpp"
#include "mixtran/model.hpp"

namespace mixtran {

/// Instrumentation for one top-k run: every value the working threshold
/// takes after a tightening step, in order.
struct TopkTrace {
  std::vector<double> thresholds;
};

/// Reference enumerator: the full double loop over ordered lane pairs
/// (t2, t3), no pruning. Returns every mixed transport (t1, t2, t3) with
/// reduction rate <= r. This is the oracle the optimized searches are
/// tested against; result order is unspecified (set semantics).
/// Throws std::out_of_range if t1 is not in the index and
/// std::invalid_argument if r is outside [1/3, 1).
std::vector<MixedTransport> brute_force_enumerate(const LaneIndex& index, std::uint32_t t1,
                                                  double r);

/// Pruned enumerator: iterates candidate start bases and their lane
/// buckets, discarding subtrees with the four level predicates, then
/// applies the exact rate test. Returns the same set as
/// brute_force_enumerate for every input.
std::vector<MixedTransport> pruned_enumerate(const LaneIndex& index, std::uint32_t t1,
                                             double r);

/// Top-k variant of the pruned enumerator: keeps the k smallest-rate
/// qualifying transports in a bounded max-heap and, once the heap is
/// full, tightens the working threshold to the heap's largest rate so
/// later pruning gets stronger. Returns up to k transports ascending by
/// rate; ties at the k-th rank keep an iteration-order representative.
/// Also throws std::invalid_argument if k < 1.
std::vector<MixedTransport> topk_enumerate(const LaneIndex& index, std::uint32_t t1, double r,
                                           std::uint32_t k, TopkTrace* trace = nullptr);

}  // namespace mixtran
