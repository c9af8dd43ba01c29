#include "mixtran/lane_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixtran {

LaneIndex::LaneIndex(const Dataset& dataset) : dataset_(&dataset) {
  const std::size_t n_bases = dataset.bases.size();
  const std::size_t n_lanes = dataset.lanes.size();

  lane_by_id_.reserve(n_lanes);
  for (std::uint32_t i = 0; i < n_lanes; ++i) {
    const Lane& lane = dataset.lanes[i];
    if (lane.start >= n_bases || lane.end >= n_bases)
      throw std::invalid_argument("lane '" + lane.id + "' references an unknown base");
    if (!lane_by_id_.emplace(lane.id, i).second)
      throw std::invalid_argument("duplicate lane id '" + lane.id + "'");
  }

  // counting sort into per-start buckets
  bucket_offsets_.assign(n_bases + 1, 0);
  for (const Lane& lane : dataset.lanes) ++bucket_offsets_[lane.start + 1];
  for (std::size_t b = 0; b < n_bases; ++b) bucket_offsets_[b + 1] += bucket_offsets_[b];

  bucket_lanes_.resize(n_lanes);
  {
    std::vector<std::uint32_t> cursor(bucket_offsets_.begin(), bucket_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < n_lanes; ++i)
      bucket_lanes_[cursor[dataset.lanes[i].start]++] = i;
  }
  for (std::size_t b = 0; b < n_bases; ++b) {
    std::sort(bucket_lanes_.begin() + bucket_offsets_[b],
              bucket_lanes_.begin() + bucket_offsets_[b + 1],
              [&](std::uint32_t lhs, std::uint32_t rhs) {
                return dataset.lanes[lhs].id < dataset.lanes[rhs].id;
              });
  }

  for (std::uint32_t b = 0; b < n_bases; ++b)
    if (bucket_offsets_[b + 1] > bucket_offsets_[b]) start_bases_.push_back(b);
  std::sort(start_bases_.begin(), start_bases_.end(),
            [&](std::uint32_t lhs, std::uint32_t rhs) {
              return dataset.bases[lhs].id < dataset.bases[rhs].id;
            });
}

}  // namespace mixtran
