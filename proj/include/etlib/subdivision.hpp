#pragma once

#include "etlib/et.hpp"

namespace etlib {

// Rational point of the order complex of a poset's proper part: a chain with
// nonnegative weights summing to one.  Zero-weight padding is permitted and
// ignored by same_point.
struct ChainPoint {
  std::vector<int> chain;
  std::vector<Rat> weights;
};

// Copy with zero weights dropped and the support sorted bottom-up.
ChainPoint pruned(const GradedPoset& p, const ChainPoint& c);

bool same_point(const GradedPoset& p, const ChainPoint& a, const ChainPoint& b);

// The simplicial map collapsing the interval poset e = et(l, .) back onto l,
// linear on every chain simplex: {y} -> y, [x,z] -> x/2 + z/2 for proper x
// and z, [x,top] -> x, [bottom,z] -> z.
ChainPoint pi(const GradedPoset& l, const EtResult& e, const ChainPoint& c);

// Right inverse of pi, exact: pi(l, e, pi_inverse(l, e, q)) == q.  The
// weights are split by the staircase overlap rule over the nested intervals
// spanned by q's support (the middle index is read off e).
ChainPoint pi_inverse(const GradedPoset& l, const EtResult& e,
                      const ChainPoint& q);

}  // namespace etlib
