#pragma once

#include <map>
#include <memory>
#include <optional>

#include "etlib/et.hpp"
#include "etlib/linalg.hpp"
#include "etlib/poset.hpp"

namespace etlib {

enum class Side { Beneath, On, Beyond };

struct Hyperplane {
  RatVec a;
  Rat b = 0;
};

// <a,p> vs b.
Side side(const Hyperplane& h, const RatVec& p);

// Polytope in combined V/H form.  `hull` holds affine-hull equations
// <a,x> = b (empty for full-dimensional bodies); facet inequalities are
// <a,x> <= b.  validate() certifies that vertices and facets describe the
// same polytope, canonicalizes facet normals into the hull's direction
// space, and attaches the face lattice; most operations require a
// certified input.
struct VHPolytope {
  int ambient = 0;
  std::vector<Hyperplane> hull;
  std::vector<RatVec> vertices;
  std::vector<Hyperplane> facets;
  RatVec center;
  std::optional<Rat> r2;

  // filled in by validate()
  int dim = -1;
  std::vector<Bits> facet_vertices;  // per facet
  std::vector<Bits> vertex_facets;   // per vertex
  std::shared_ptr<const FaceLattice> faces;
  bool certified = false;
};

VHPolytope validate(VHPolytope p);

// Polar within the affine hull, with center p.center and squared radius
// r2 > 0: facet F of p becomes vertex c + r2/(b_F - <a_F,c>) a_F, vertex v
// becomes facet <v-c, y> <= r2 + <v-c, c>.  Result is certified; applying
// polar twice with the same r2 restores p exactly, including order.
VHPolytope polar(const VHPolytope& p, const Rat& r2);

// Foot of the perpendicular from q onto the affine span of pts.
RatVec foot_of_perpendicular(const RatVec& q, const std::vector<RatVec>& pts);

// Exact membership of x in the relative interior of conv(pts).
bool in_relative_interior(const RatVec& x, const std::vector<RatVec>& pts);

// Point where the sphere of squared radius r2 around p.center touches the
// face spanned by the given vertices, if it touches it in the relative
// interior; nullopt otherwise.  The empty face is rejected.
std::optional<RatVec> tangency_point(const VHPolytope& p,
                                     const std::vector<int>& face_vertices,
                                     const Rat& r2);

struct TangencyReport {
  bool tangent = false;
  std::map<int, RatVec> points;  // face-lattice element id -> contact point
  std::string detail;
};

// Checks that every t-face of p touches the sphere in its relative
// interior, vertices lie strictly outside (t >= 1) and facets cut strictly
// inside (t <= dim-2).
TangencyReport is_t_tangent(const VHPolytope& p, int t, const Rat& r2);

// Given a polytope whose t-faces are tangent to the sphere of squared
// radius r2, builds the polytope with a facet through each tangency point;
// its vertices are those of p together with the polar's, and its face
// lattice realizes the interval construction applied to p's lattice.
VHPolytope et_realization(const VHPolytope& p, int t, const Rat& r2);

}  // namespace etlib
