#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mixtran/dataset.hpp"

namespace mixtran {

/// Immutable query structure over one dataset's lanes:
///   - lanes_from(b): T(b), the lanes starting at base b, sorted by lane id
///   - start_bases(): S, the bases with at least one outgoing lane, sorted
///     by base id
///
/// The sorted orders make every enumeration and benchmark reproducible.
/// The index borrows the dataset, which must outlive it; once built it is
/// read-only and safe for any number of concurrent readers.
class LaneIndex {
public:
  /// Validates lane ids (unique) and base references, then builds the
  /// buckets. Throws std::invalid_argument on duplicate lane ids or
  /// lanes referencing unknown bases.
  explicit LaneIndex(const Dataset& dataset);

  const MetricProvider& metric() const { return dataset_->metric; }
  const Dataset& dataset() const { return *dataset_; }

  std::size_t lane_count() const { return dataset_->lanes.size(); }
  const Lane& lane(std::uint32_t i) const { return dataset_->lanes[i]; }

  /// S, as base indices.
  std::span<const std::uint32_t> start_bases() const { return start_bases_; }

  /// T(b), as lane indices; empty for end-only or unknown bases.
  std::span<const std::uint32_t> lanes_from(std::uint32_t base) const {
    if (base >= bucket_offsets_.size() - 1) return {};
    return std::span<const std::uint32_t>(bucket_lanes_.data() + bucket_offsets_[base],
                                          bucket_offsets_[base + 1] - bucket_offsets_[base]);
  }

  std::optional<std::uint32_t> find_lane(const std::string& id) const {
    const auto it = lane_by_id_.find(id);
    if (it == lane_by_id_.end()) return std::nullopt;
    return it->second;
  }

private:
  const Dataset* dataset_;
  std::vector<std::uint32_t> start_bases_;     // S, sorted by base id
  std::vector<std::uint32_t> bucket_offsets_;  // base_count + 1 entries
  std::vector<std::uint32_t> bucket_lanes_;    // T(b) buckets, each sorted by lane id
  std::unordered_map<std::string, std::uint32_t> lane_by_id_;
};

}  // namespace mixtran
