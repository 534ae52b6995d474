#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "etlib/rational.hpp"

namespace etlib {

using Bits = boost::dynamic_bitset<unsigned long long>;

// Finite graded poset with a unique minimum and maximum. Elements are dense
// ids 0..size()-1. rank(bottom) = 0 and rank(top) = length(); covers raise
// rank by exactly one, every non-maximal element has an upper cover and every
// non-minimal element a lower cover, so all maximal chains have equal length.
// Comparability is O(1) via per-element up-set/down-set bitsets.
class GradedPoset {
 public:
  // Validates the input: throws RankSkip if some cover does not raise rank by
  // one, NoBoundedBottom/NoBoundedTop if the minimum or maximum is not unique,
  // NotGraded if some element has no cover into the adjacent rank.
  static GradedPoset from_covers(std::vector<int> ranks,
                                 const std::vector<std::pair<int, int>>& covers);

  int size() const { return static_cast<int>(ranks_.size()); }
  int length() const { return length_; }
  int rank(int x) const { return ranks_[x]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && up_[x].test(y); }

  const std::vector<int>& upper_covers(int x) const { return ucov_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lcov_[x]; }
  // up_set(x) = { y : x <= y } including x itself; down_set dually.
  const Bits& up_set(int x) const { return up_[x]; }
  const Bits& down_set(int x) const { return down_[x]; }
  const Bits& rank_mask(int r) const { return rank_mask_[r]; }
  std::vector<int> rank_elements(int r) const;

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<int>> ucov_, lcov_;
  std::vector<Bits> up_, down_, rank_mask_;
  int length_ = 0, bottom_ = -1, top_ = -1;
};

// A lattice is a GradedPoset on which meet/join always succeed; is_lattice
// certifies that, and the et/geometry layers only accept certified inputs.
using GradedLattice = GradedPoset;

// The proper-part ranks: L_i is the set of elements of poset rank i+1, so
// L_{-1} = {bottom} and L_d = {top} when length() = d+1.
inline std::vector<int> level(const GradedPoset& p, int i) { return p.rank_elements(i + 1); }

// The closed interval [x,z] as a poset of its own; keeps the id map new->old.
struct SubPoset {
  GradedPoset poset;
  std::vector<int> orig;
};
SubPoset interval_poset(const GradedPoset& p, int x, int z);

GradedPoset opposite(const GradedPoset& p);

std::optional<int> meet(const GradedPoset& p, int x, int y);
std::optional<int> join(const GradedPoset& p, int x, int y);
bool is_lattice(const GradedPoset& p);

// Moebius function of the interval [x,y]; 0 unless x <= y.
long long moebius(const GradedPoset& p, int x, int y);

// Every proper interval of positive length has as many elements of even rank
// as of odd rank.
bool is_eulerian(const GradedPoset& p);

// [x,z] is boolean iff it is isomorphic to the face lattice of a simplex; in
// an Eulerian poset this is equivalent to |[x,z]| = 2^len and #atoms = len.
bool is_boolean_interval(const GradedPoset& p, int x, int z);

// Number of chains hitting exactly the proper-part ranks in S (entries in
// -1..length()-1 are allowed but -1 and length()-1 are redundant). Throws
// BadRankIndex for entries outside that range.
long long flag_number(const GradedPoset& p, std::vector<int> s);

struct FlagVector {
  int d = 0;                 // proper part lives in rank indices -1..d
  std::vector<long long> f;  // f[i+1] = f_i, i = -1..d
  std::map<std::vector<int>, long long> flag;  // all pairs {i,j}, 0 <= i < j < d
  long long fi(int i) const { return f[i + 1]; }
};
FlagVector flag_vector(const GradedPoset& p);

// (f_1 + f_2) / (f_0 + f_3); only defined when d == 4.
Rat fatness(const FlagVector& fv);
Rat fatness(const GradedPoset& p);

// Largest k such that every lower interval up to rank k+1 is boolean, largest
// h dually, plus whether the whole lattice is boolean.
struct SimplicialityProfile {
  int max_simplicial = -1;
  int max_simple = -1;
  bool is_boolean = false;
};
SimplicialityProfile simpliciality_profile(const GradedPoset& p);

// Isomorphism search via partition refinement with individualization; returns
// the element map A->B or nullopt.
std::optional<std::vector<int>> isomorphism(const GradedPoset& a, const GradedPoset& b);

inline bool are_isomorphic(const GradedPoset& a, const GradedPoset& b) {
  return isomorphism(a, b).has_value();
}

// Face lattice of a polytope given facet->vertex incidences, built by closing
// the incidences under intersection. vertex_sets[e] is the vertex set of
// element e (all vertices for the top, empty for the bottom).
struct FaceLattice {
  GradedPoset poset;
  std::vector<Bits> vertex_sets;
  std::map<Bits, int> index;  // vertex set -> element id
};
FaceLattice face_lattice_from_incidence(int nvertices, const std::vector<Bits>& facet_vertices);

GradedPoset boolean_lattice(int n);

}  // namespace etlib
