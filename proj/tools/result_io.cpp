#include "result_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mixtran::cli {

void sort_for_output(std::vector<MixedTransport>& transports) {
  std::sort(transports.begin(), transports.end(),
            [](const MixedTransport& a, const MixedTransport& b) {
              if (a.rate != b.rate) return a.rate < b.rate;
              if (a.t2 != b.t2) return a.t2 < b.t2;
              return a.t3 < b.t3;
            });
}

void write_transports_csv(const std::filesystem::path& out,
                          const std::vector<MixedTransport>& transports) {
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out.string());
  file << "t1,t2,t3,rate,x1,x2,d3,z2,z1\n";
  char buf[160];
  for (const MixedTransport& mt : transports) {
    std::snprintf(buf, sizeof(buf), ",%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", mt.rate, mt.x1, mt.x2,
                  mt.d3, mt.z2, mt.z1);
    file << mt.t1 << "," << mt.t2 << "," << mt.t3 << buf;
  }
  if (!file.flush()) throw std::runtime_error("write failed for " + out.string());
}

}  // namespace mixtran::cli
