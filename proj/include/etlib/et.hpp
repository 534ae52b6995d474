#pragma once

#include "etlib/poset.hpp"

namespace etlib {

// Element of the interval poset built from L at middle index t: the top
// (empty set), a singleton {y} with y at rank t+1, or an interval [x,z] with
// rank(x) <= t and rank(z) >= t+2 (x is stored in x, z in z; singletons store
// y in x).
struct EtElement {
  enum class Kind { TopEmpty, Singleton, Interval };
  Kind kind;
  int x = -1;
  int z = -1;
};

struct EtResult {
  GradedPoset poset;
  std::vector<EtElement> elems;  // indexed by element id
  int empty_id = -1;
  std::map<std::pair<int, int>, int> interval_id;  // (x,z) -> id
  std::map<int, int> singleton_id;                 // y -> id

  int interval(int x, int z) const {
    auto it = interval_id.find({x, z});
    return it == interval_id.end() ? -1 : it->second;
  }
  int singleton(int y) const {
    auto it = singleton_id.find(y);
    return it == singleton_id.end() ? -1 : it->second;
  }
};

// The interval construction: all [x,z] straddling rank t+1 plus singletons
// {y} over rank t+1 plus the empty set, ordered by reversed inclusion.
// Indices use the proper-part convention: 0 <= t <= d-1 with d+1 = length(L).
EtResult et(const GradedPoset& l, int t);

// f-vector (f_{-1}..f_d) predicted from the flag numbers of L without
// building the poset.
std::vector<long long> et_fvector_formula(const GradedPoset& l, int t);

// Flag identity equivalent to the output being 2-simple:
// f_{t-2,t,t+2}(L) = 6 f_{t-2,t+2}(L).
bool et_two_simple_criterion(const GradedPoset& l, int t);

// Combinatorial model of simultaneous truncation of all k-faces.
GradedPoset d_construction(const GradedPoset& l, int k);

}  // namespace etlib
