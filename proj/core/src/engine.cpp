#include "mixtran/engine.hpp"

#include <stdexcept>

#include "mixtran/bounded_max_heap.hpp"
#include "mixtran/pruning.hpp"

namespace mixtran {

namespace {

void check_query(const LaneIndex& index, std::uint32_t t1, double r) {
  if (t1 >= index.lane_count())
    throw std::out_of_range("enumerate: lane index " + std::to_string(t1) +
                            " is not in the index");
  if (!valid_rate_threshold(r))
    throw std::invalid_argument("enumerate: rate threshold must lie in [1/3, 1)");
}

MixedTransport make_transport(const LaneIndex& index, std::uint32_t t1, std::uint32_t t2,
                              std::uint32_t t3, double x1, double x2, double z1, double z2,
                              const RateParts& parts) {
  MixedTransport mt;
  mt.t1 = index.lane(t1).id;
  mt.t2 = index.lane(t2).id;
  mt.t3 = index.lane(t3).id;
  mt.x1 = x1;
  mt.x2 = x2;
  mt.z1 = z1;
  mt.z2 = z2;
  mt.d1 = index.lane(t1).dist;
  mt.d2 = index.lane(t2).dist;
  mt.d3 = index.lane(t3).dist;
  mt.rate = parts.num / parts.den;
  return mt;
}

}  // namespace

std::vector<MixedTransport> brute_force_enumerate(const LaneIndex& index, std::uint32_t t1,
                                                  double r) {
  check_query(index, t1, r);
  const MetricProvider& d = index.metric();
  const Lane& first = index.lane(t1);
  const double d1 = first.dist;
  const auto n = static_cast<std::uint32_t>(index.lane_count());

  std::vector<MixedTransport> found;
  for (std::uint32_t t2 = 0; t2 < n; ++t2) {
    if (t2 == t1) continue;
    const Lane& second = index.lane(t2);
    const double d2 = second.dist;
    const double x1 = d(first.start, second.start);
    const double z1 = d(second.end, first.end);
    for (std::uint32_t t3 = 0; t3 < n; ++t3) {
      if (t3 == t1 || t3 == t2) continue;
      const Lane& third = index.lane(t3);
      const double d3 = third.dist;
      const double x2 = d(second.start, third.start);
      const double z2 = d(third.end, second.end);
      const RateParts parts = rate_parts(d1, d2, d3, x1, x2, z1, z2);
      if (rate_within(parts, r))
        found.push_back(make_transport(index, t1, t2, t3, x1, x2, z1, z2, parts));
    }
  }
  return found;
}

std::vector<MixedTransport> pruned_enumerate(const LaneIndex& index, std::uint32_t t1,
                                             double r) {
  check_query(index, t1, r);
  const MetricProvider& d = index.metric();
  const Lane& first = index.lane(t1);
  const double d1 = first.dist;
  const double rp = pruning_threshold(r);

  std::vector<MixedTransport> found;
  for (const std::uint32_t s : index.start_bases()) {
    const double x = d(first.start, s);
    const double y = d(s, first.end);
    if (!lemma1_admissible(d1, x, y, rp)) continue;
    for (const std::uint32_t t3 : index.lanes_from(s)) {
      if (t3 == t1) continue;
      const Lane& third = index.lane(t3);
      const double d3 = third.dist;
      const double z = d(third.end, first.end);
      if (!lemma2_admissible(d1, x, d3, z, rp)) continue;
      for (const std::uint32_t sp : index.start_bases()) {
        const double x1 = d(first.start, sp);
        const double x2 = d(sp, third.start);
        if (!lemma3_admissible(d1, d3, z, x1, x2, rp)) continue;
        for (const std::uint32_t t2 : index.lanes_from(sp)) {
          if (t2 == t1 || t2 == t3) continue;
          const Lane& second = index.lane(t2);
          if (!lemma4_admissible(d1, d3, z, x1, x2, second.dist, rp)) continue;
          const double z2 = d(third.end, second.end);
          const double z1 = d(second.end, first.end);
          const RateParts parts = rate_parts(d1, second.dist, d3, x1, x2, z1, z2);
          if (rate_within(parts, r))
            found.push_back(make_transport(index, t1, t2, t3, x1, x2, z1, z2, parts));
        }
      }
    }
  }
  return found;
}

std::vector<MixedTransport> topk_enumerate(const LaneIndex& index, std::uint32_t t1, double r,
                                           std::uint32_t k, TopkTrace* trace) {
  check_query(index, t1, r);
  if (k < 1) throw std::invalid_argument("topk_enumerate: k must be at least 1");
  const MetricProvider& d = index.metric();
  const Lane& first = index.lane(t1);
  const double d1 = first.dist;

  // Working threshold. Starts at the requested r; once the heap holds k
  // entries it follows the heap's largest rate, so every predicate below
  // this point prunes against the current k-th best. Bounds already
  // passed at an earlier, larger threshold stay valid necessary
  // conditions, so outer loop levels are not revisited.
  double rw = r;
  double rwp = pruning_threshold(rw);
  BoundedMaxHeap<MixedTransport> heap(k);

  for (const std::uint32_t s : index.start_bases()) {
    const double x = d(first.start, s);
    const double y = d(s, first.end);
    if (!lemma1_admissible(d1, x, y, rwp)) continue;
    for (const std::uint32_t t3 : index.lanes_from(s)) {
      if (t3 == t1) continue;
      const Lane& third = index.lane(t3);
      const double d3 = third.dist;
      const double z = d(third.end, first.end);
      if (!lemma2_admissible(d1, x, d3, z, rwp)) continue;
      for (const std::uint32_t sp : index.start_bases()) {
        const double x1 = d(first.start, sp);
        const double x2 = d(sp, third.start);
        if (!lemma3_admissible(d1, d3, z, x1, x2, rwp)) continue;
        for (const std::uint32_t t2 : index.lanes_from(sp)) {
          if (t2 == t1 || t2 == t3) continue;
          const Lane& second = index.lane(t2);
          if (!lemma4_admissible(d1, d3, z, x1, x2, second.dist, rwp)) continue;
          const double z2 = d(third.end, second.end);
          const double z1 = d(second.end, first.end);
          const RateParts parts = rate_parts(d1, second.dist, d3, x1, x2, z1, z2);
          if (!rate_within(parts, rw)) continue;
          if (heap.full()) heap.pop_max();  // evict the current worst
          heap.push(parts.num / parts.den,
                    make_transport(index, t1, t2, t3, x1, x2, z1, z2, parts));
          if (heap.full()) {
            rw = heap.max_key();
            rwp = pruning_threshold(rw);
            if (trace) trace->thresholds.push_back(rw);
          }
        }
      }
    }
  }

  auto entries = heap.take_sorted();
  std::vector<MixedTransport> found;
  found.reserve(entries.size());
  for (auto& e : entries) found.push_back(std::move(e.value));
  return found;
}

}  // namespace mixtran
