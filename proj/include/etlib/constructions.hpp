#pragma once

#include <string>

#include "etlib/geometry.hpp"

namespace etlib {

// Generators for the concrete polytopes: "simplex" (regular, in the hull
// sum x = 1 of R^{d+1}), "cube" ([-1,1]^d), "cross" (conv(+-e_i)),
// "hypersimplex" (0/1 vectors with k ones, hull sum x = k, needs k),
// "M" (permutations of (+-1^{d-2},0,0), d >= 4), "halfcube_N" (sign vectors
// with an even number of minus signs, d >= 4), "prism_over_simplex"
// (simplex base times [0,1]).  All outputs are certified.
VHPolytope generate(const std::string& kind, int d, int k = 0);

// Simultaneous-truncation data: one hyperplane per vertex, cutting only
// that vertex off, with both endpoint cuts meeting each edge in one shared
// interior point.
struct CutSystem {
  std::vector<Hyperplane> cuts;                       // cuts[v] excludes v
  std::map<std::pair<int, int>, RatVec> edge_points;  // keyed v < w
};

// Checks every CutSystem invariant against p and fills in the edge points;
// throws CutInvariantViolated naming the offending vertex or edge.
CutSystem certify_cut_system(const VHPolytope& p, std::vector<Hyperplane> cuts);

// Cut through the midpoints of the edges at each vertex; CutSearchFailed
// when those midpoints are not coplanar.
CutSystem midpoint_cuts(const VHPolytope& p);

// Cut through the tangency points of the edges at each vertex, for a body
// whose edges are tangent to the sphere of squared radius r2.
CutSystem tangency_cuts(const VHPolytope& p, const Rat& r2);

// Cut through the points v + s_v (w - v) on the edges at each vertex, with
// s_v = s or 1-s by a 2-coloring of the edge graph, so the two endpoint cuts
// of every edge meet in the same point.  An edge graph with an odd cycle only
// admits s = 1/2; other s then throw CutSearchFailed.
CutSystem parametric_cuts(const VHPolytope& p, const Rat& s);

// Walks a fixed parameter schedule ending at the midpoints and returns the
// first cut system that certifies.
CutSystem inductive_cuts(const VHPolytope& p);

// Convex hull of p and one extra vertex beyond facet f, realized by facet
// surgery: f is removed and replaced by a pyramid facet over each of its
// ridges.  Without an explicit apex, a point just outside the facet
// centroid is found by halving search.
VHPolytope stack(const VHPolytope& p, int facet,
                 std::optional<RatVec> apex = std::nullopt);

// Cuts every vertex at once: the result has the edge points as vertices
// and the old facets plus all cuts as facets.
VHPolytope truncate_all(const VHPolytope& p, const CutSystem& cs);

struct StackedFamily {
  std::string base;        // "simplex", "cross" or "cross_stack"
  std::vector<int> plan;   // chosen facet index per step, in the list
                           // current at that step (erase + append order)
  VHPolytope polytope;
  CutSystem cuts;
  bool cuts_certified = false;
  std::string note;  // which cut strategy certified
};

// Stacked polytopes that stay truncatable: starts from the base ("simplex"
// or "cross") with midpoint cuts, then for each plan entry places a vertex
// beyond that facet but beneath every other facet and cut, and threads the
// new cut through the points where the new edges meet the old cuts.
StackedFamily build_truncatable_stacked(int d, const std::vector<int>& plan,
                                        const std::string& base = "simplex");

// Tower of n cross polytopes glued facet-to-facet in R^4, realized by
// telescoping anti-aligned tetrahedron layers (sizes shrink so every glued
// ridge stays convex); vertices rational, S_4-symmetric.  Cuts are searched
// as midpoints first, then a one-parameter symmetric ansatz; when neither
// certifies, throws CutSearchFailed if require_cuts, else returns with
// cuts_certified = false.
StackedFamily build_cross_stack(int n, bool require_cuts = true);

}  // namespace etlib
