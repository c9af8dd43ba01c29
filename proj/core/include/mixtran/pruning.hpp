#pragma once

#include <cmath>

namespace mixtran {

// Pruning predicates for the four loop levels of the pruned search, one
// per level. Each is a necessary condition, derived from the metric
// axioms, for some mixed transport (t1, t2, t3) compatible with the
// distances seen so far to have a reduction rate of r or less. Returning
// true admits the candidate to the next level; returning false discards
// it together with everything below it.
//
// Distances (all km):
//   d1 = t1 length, d2 = t2 length, d3 = t3 length
//   x  = d(t1.start, s)    where s is the candidate start base of t3
//   y  = d(s, t1.end)
//   z  = d(t3.end, t1.end)
//   x1 = d(t1.start, s')   where s' is the candidate start base of t2
//   x2 = d(s', t3.start)
//
// Every bound is monotone in r over [1/3, 1): a candidate admitted at
// some r is admitted at every larger r. The top-k search relies on this
// when it tightens the working threshold mid-run.

/// Level 1, filters candidate start bases s for t3:
/// x + y <= (2r / (1 - r)) * d1.
inline bool lemma1_admissible(double d1, double x, double y, double r) {
  return x + y <= (2.0 * r / (1.0 - r)) * d1;
}

/// Level 2, filters lanes t3 in T(s):
/// (1 - 2r) * d3 + (1 - r) * z <= (r - 1) * x + r * d1.
/// One linear form; no case split on r vs 1/2 is needed.
inline bool lemma2_admissible(double d1, double x, double d3, double z, double r) {
  return (1.0 - 2.0 * r) * d3 + (1.0 - r) * z <= (r - 1.0) * x + r * d1;
}

/// Level 3, filters candidate start bases s' for t2:
/// x1 + (1 - r) * x2 <= r * d1 + (2r - 1) * d3 - (1 - r) * z.
inline bool lemma3_admissible(double d1, double d3, double z, double x1, double x2,
                              double r) {
  return x1 + (1.0 - r) * x2 <= r * d1 + (2.0 * r - 1.0) * d3 - (1.0 - r) * z;
}

/// Level 4, filters lanes t2 in T(s'):
/// d2 >= (x1 + x2 + z) / r - d1 + ((1 - r) / r) * d3.
inline bool lemma4_admissible(double d1, double d3, double z, double x1, double x2,
                              double d2, double r) {
  return d2 >= (x1 + x2 + z) / r - d1 + ((1.0 - r) / r) * d3;
}

/// Threshold the searches feed to the predicates. The accept test
/// compares num <= r * den with a rounded product, which can admit a
/// transport whose exact rate sits up to one ulp above r; one ulp of
/// headroom here keeps every predicate at least as permissive as that
/// test, so pruning can never discard a transport the accept test keeps
/// (visible with fully coincident lanes at r = 1/3, where the exact rate
/// equals the threshold).
inline double pruning_threshold(double r) { return std::nextafter(r, 1.0); }

}  // namespace mixtran
