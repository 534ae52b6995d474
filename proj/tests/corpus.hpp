#pragma once

// Hand-built face lattices used across the test files, constructed purely
// from vertex-facet incidence so they do not depend on the geometry module.

#include "etlib/poset.hpp"

namespace testcorpus {

using etlib::Bits;
using etlib::FaceLattice;
using etlib::GradedPoset;

// d-cube: vertices are sign vectors read off bit b of the index, facets are
// {x_b = +1} and {x_b = -1}.
inline FaceLattice cube_lattice(int d) {
  int nv = 1 << d;
  std::vector<Bits> facets;
  for (int b = 0; b < d; ++b)
    for (int sign = 0; sign < 2; ++sign) {
      Bits f(nv);
      for (int v = 0; v < nv; ++v)
        if (((v >> b) & 1) == sign) f.set(v);
      facets.push_back(f);
    }
  return etlib::face_lattice_from_incidence(nv, facets);
}

// d-dimensional cross polytope: vertices +e_1..+e_d then -e_1..-e_d; one
// facet per sign vector eps, containing eps_i * e_i for every i.
inline FaceLattice cross_lattice(int d) {
  int nv = 2 * d;
  std::vector<Bits> facets;
  for (int eps = 0; eps < (1 << d); ++eps) {
    Bits f(nv);
    for (int i = 0; i < d; ++i) f.set(((eps >> i) & 1) ? i : d + i);
    facets.push_back(f);
  }
  return etlib::face_lattice_from_incidence(nv, facets);
}

inline FaceLattice octahedron_lattice() { return cross_lattice(3); }

}  // namespace testcorpus
