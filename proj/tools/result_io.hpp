#pragma once

#include <filesystem>
#include <vector>

#include "mixtran/model.hpp"

namespace mixtran::cli {

/// Canonical result-file order: ascending by rate, then by (t2, t3) ids.
void sort_for_output(std::vector<MixedTransport>& transports);

/// Writes `t1,t2,t3,rate,x1,x2,d3,z2,z1` rows, numerics with 6 decimal
/// places. Byte-deterministic for a given transport list.
void write_transports_csv(const std::filesystem::path& out,
                          const std::vector<MixedTransport>& transports);

}  // namespace mixtran::cli
