#include "mixtran/model.hpp"

#include <stdexcept>

namespace mixtran {

MixedTransport reduction_rate(const Lane& t1, const Lane& t2, const Lane& t3,
                              const MetricProvider& metric) {
  if (t1.id == t2.id || t1.id == t3.id || t2.id == t3.id)
    throw std::invalid_argument("mixed transport lanes must have pairwise distinct ids");

  MixedTransport mt;
  mt.t1 = t1.id;
  mt.t2 = t2.id;
  mt.t3 = t3.id;
  mt.d1 = t1.dist;
  mt.d2 = t2.dist;
  mt.d3 = t3.dist;
  mt.x1 = metric(t1.start, t2.start);
  mt.x2 = metric(t2.start, t3.start);
  mt.z1 = metric(t2.end, t1.end);
  mt.z2 = metric(t3.end, t2.end);
  const RateParts p = rate_parts(mt.d1, mt.d2, mt.d3, mt.x1, mt.x2, mt.z1, mt.z2);
  mt.rate = p.num / p.den;
  return mt;
}

}  // namespace mixtran
