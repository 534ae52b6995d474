#include "etlib/geometry.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "etlib/lp.hpp"

namespace etlib {

namespace {

// Scales (a, b) by the positive rational that clears denominators and
// divides out the content, so equal halfspaces get equal representations.
void make_primitive(RatVec& a, Rat& b) {
  Int l = 1;
  for (const auto& v : a) l = lcm(l, Int(denominator(v)));
  l = lcm(l, Int(denominator(b)));
  auto scaled = [&](const Rat& v) { return Int(numerator(Rat(v * l))); };
  Int g = 0;
  for (const auto& v : a) g = gcd(g, scaled(v));
  g = gcd(g, scaled(b));
  if (g == 0) return;
  for (auto& v : a) v = Rat(scaled(v) / g);
  b = Rat(scaled(b) / g);
}

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& v) { return v == 0; });
}

struct HullSpace {
  RatMat rows;   // independent equation coefficients
  RatVec offs;   // matching right-hand sides
  RatMat gram;   // rows * rows^T

  // a' = a - rows^T lambda with rows a' = 0; b shifts along.
  void project(RatVec& a, Rat& b) const {
    if (rows.empty()) return;
    size_t k = rows.size();
    RatVec rhs(k);
    for (size_t i = 0; i < k; ++i) rhs[i] = dot(rows[i], a);
    auto lam = solve(gram, rhs);
    if (!lam) throw Error("BadParams", "hull projection failed");
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < a.size(); ++j) a[j] -= (*lam)[i] * rows[i][j];
      b -= (*lam)[i] * offs[i];
    }
  }
};

}  // namespace

Side side(const Hyperplane& h, const RatVec& p) {
  check_dim(p, static_cast<int>(h.a.size()), "side");
  Rat v = dot(h.a, p) - h.b;
  if (v > 0) return Side::Beyond;
  if (v < 0) return Side::Beneath;
  return Side::On;
}

VHPolytope validate(VHPolytope p) {
  const int n = p.ambient;
  if (n < 1) throw Error("BadParams", "ambient dimension must be positive");
  if (p.vertices.empty() || p.facets.empty())
    throw Error("BadParams", "polytope needs vertices and facets");
  for (const auto& v : p.vertices) check_dim(v, n, "vertex");
  for (const auto& h : p.hull) check_dim(h.a, n, "hull equation");
  for (const auto& h : p.facets) check_dim(h.a, n, "facet normal");

  // Reduce the hull to an independent echelon system.
  HullSpace hs;
  if (!p.hull.empty()) {
    RatMat hm;
    for (const auto& h : p.hull) {
      RatVec r = h.a;
      r.push_back(h.b);
      hm.push_back(std::move(r));
    }
    auto piv = rref(hm);
    std::vector<Hyperplane> hull;
    for (size_t i = 0; i < piv.size(); ++i) {
      if (piv[i] == n) throw Error("BadParams", "inconsistent hull equations");
      RatVec a(hm[i].begin(), hm[i].end() - 1);
      Rat b = hm[i].back();
      make_primitive(a, b);
      hull.push_back({a, b});
      hs.rows.push_back(std::move(a));
      hs.offs.push_back(b);
    }
    p.hull = std::move(hull);
    size_t k = hs.rows.size();
    hs.gram.assign(k, RatVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) hs.gram[i][j] = dot(hs.rows[i], hs.rows[j]);
  }
  const int d = n - static_cast<int>(hs.rows.size());
  if (d < 1) throw Error("BadParams", "hull equations leave no dimension");
  p.dim = d;

  const int nv = static_cast<int>(p.vertices.size());
  for (int i = 0; i < nv; ++i) {
    for (const auto& h : p.hull) {
      if (dot(h.a, p.vertices[i]) != h.b)
        throw Error("VertexOutside",
                    "vertex " + std::to_string(i) + " is off the affine hull");
    }
  }
  if (affine_rank(p.vertices) != d)
    throw Error("NotEulerianIncidence", "vertices span less than the hull");
  {
    std::set<RatVec> seen;
    for (const auto& v : p.vertices) {
      if (!seen.insert(v).second)
        throw Error("NotEulerianIncidence", "coincident vertices");
    }
  }

  if (p.center.empty()) {
    // Default reference point: minimum-norm point of the affine hull.
    p.center.assign(n, 0);
    if (!hs.rows.empty()) {
      auto lam = solve(hs.gram, hs.offs);
      if (!lam) throw Error("BadParams", "hull projection failed");
      for (size_t i = 0; i < hs.rows.size(); ++i)
        for (int j = 0; j < n; ++j) p.center[j] += (*lam)[i] * hs.rows[i][j];
    }
  } else {
    check_dim(p.center, n, "center");
  }

  const int nf = static_cast<int>(p.facets.size());
  for (int f = 0; f < nf; ++f) {
    hs.project(p.facets[f].a, p.facets[f].b);
    make_primitive(p.facets[f].a, p.facets[f].b);
    if (is_zero(p.facets[f].a))
      throw Error("DanglingFacet",
                  "facet " + std::to_string(f) + " has no direction in the hull");
  }

  p.facet_vertices.assign(nf, Bits(nv));
  p.vertex_facets.assign(nv, Bits(nf));
  for (int f = 0; f < nf; ++f) {
    for (int i = 0; i < nv; ++i) {
      Rat v = dot(p.facets[f].a, p.vertices[i]) - p.facets[f].b;
      if (v > 0)
        throw Error("VertexOutside", "vertex " + std::to_string(i) +
                                         " lies beyond facet " + std::to_string(f));
      if (v == 0) {
        p.facet_vertices[f].set(i);
        p.vertex_facets[i].set(f);
      }
    }
  }

  for (int f = 0; f < nf; ++f) {
    std::vector<RatVec> pts;
    for (auto i = p.facet_vertices[f].find_first(); i != Bits::npos;
         i = p.facet_vertices[f].find_next(i))
      pts.push_back(p.vertices[i]);
    if (affine_rank(pts) != d - 1)
      throw Error("DanglingFacet",
                  "facet " + std::to_string(f) + " is supported by " +
                      std::to_string(pts.size()) + " vertices spanning rank " +
                      std::to_string(affine_rank(pts)));
  }
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f != g && p.facet_vertices[f].is_subset_of(p.facet_vertices[g]))
        throw Error("DanglingFacet", "facet " + std::to_string(f) +
                                         " is swallowed by facet " + std::to_string(g));
    }
  }
  for (int i = 0; i < nv; ++i) {
    RatMat normals;
    for (auto f = p.vertex_facets[i].find_first(); f != Bits::npos;
         f = p.vertex_facets[i].find_next(f))
      normals.push_back(p.facets[f].a);
    if (rank(normals) != d)
      throw Error("NotEulerianIncidence",
                  "facets through vertex " + std::to_string(i) + " do not pin it");
  }

  FaceLattice fl;
  try {
    fl = face_lattice_from_incidence(nv, p.facet_vertices);
  } catch (const Error& e) {
    throw Error("NotEulerianIncidence", std::string("face structure: ") + e.what());
  }
  if (fl.poset.length() != d + 1)
    throw Error("NotEulerianIncidence",
                "face lattice has length " + std::to_string(fl.poset.length()) +
                    ", expected " + std::to_string(d + 1));
  if (!is_eulerian(fl.poset))
    throw Error("NotEulerianIncidence", "face lattice is not Eulerian");

  p.faces = std::make_shared<const FaceLattice>(std::move(fl));
  p.certified = true;
  return p;
}

VHPolytope polar(const VHPolytope& p0, const Rat& r2) {
  VHPolytope certified;
  const VHPolytope* pp = &p0;
  if (!p0.certified) {
    certified = validate(p0);
    pp = &certified;
  }
  const VHPolytope& p = *pp;
  if (r2 <= 0) throw Error("BadParams", "polar needs a positive squared radius");
  for (const auto& h : p.hull) {
    if (dot(h.a, p.center) != h.b)
      throw Error("CenterNotInterior", "center is off the affine hull");
  }
  for (size_t f = 0; f < p.facets.size(); ++f) {
    if (side(p.facets[f], p.center) != Side::Beneath)
      throw Error("CenterNotInterior",
                  "center is not strictly beneath facet " + std::to_string(f));
  }

  VHPolytope q;
  q.ambient = p.ambient;
  q.hull = p.hull;
  q.center = p.center;
  q.r2 = r2;
  for (const auto& f : p.facets) {
    Rat gap = f.b - dot(f.a, p.center);
    q.vertices.push_back(vadd(p.center, vscale(r2 / gap, f.a)));
  }
  for (const auto& v : p.vertices) {
    RatVec a = vsub(v, p.center);
    q.facets.push_back({a, r2 + dot(a, p.center)});
  }
  return validate(std::move(q));
}

RatVec foot_of_perpendicular(const RatVec& q, const std::vector<RatVec>& pts) {
  if (pts.empty()) throw Error("DegenerateFace", "empty vertex set");
  const RatVec& v0 = pts[0];
  check_dim(q, static_cast<int>(v0.size()), "foot");
  RatMat dmat;
  for (size_t i = 1; i < pts.size(); ++i) dmat.push_back(vsub(pts[i], v0));
  if (dmat.empty()) return v0;
  size_t r = dmat.size();
  RatMat gram(r, RatVec(r));
  RatVec g(r);
  RatVec qv = vsub(q, v0);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) gram[i][j] = dot(dmat[i], dmat[j]);
    g[i] = dot(dmat[i], qv);
  }
  auto mu = solve(gram, g);
  if (!mu) throw Error("DegenerateFace", "normal equations inconsistent");
  RatVec x = v0;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < x.size(); ++j) x[j] += (*mu)[i] * dmat[i][j];
  return x;
}

bool in_relative_interior(const RatVec& x, const std::vector<RatVec>& pts) {
  if (pts.empty()) return false;
  const int m = static_cast<int>(x.size());
  const int k = static_cast<int>(pts.size());
  // Weights w_i = s_i + eps, maximize eps: x in relint(conv) iff the
  // optimum is strictly positive.
  RatMat a(m + 1, RatVec(k + 1, 0));
  RatVec b(m + 1);
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i < k; ++i) {
      check_dim(pts[i], m, "relative interior");
      a[row][i] = pts[i][row];
      a[row][k] += pts[i][row];
    }
    b[row] = x[row];
  }
  for (int i = 0; i < k; ++i) a[m][i] = 1;
  a[m][k] = k;
  b[m] = 1;
  RatVec c(k + 1, 0);
  c[k] = 1;
  auto res = lp_maximize(std::move(a), std::move(b), std::move(c));
  return res.status == LpResult::Status::Optimal && res.value > 0;
}

std::optional<RatVec> tangency_point(const VHPolytope& p,
                                     const std::vector<int>& face_vertices,
                                     const Rat& r2) {
  if (face_vertices.empty()) throw Error("DegenerateFace", "empty face");
  std::vector<RatVec> pts;
  for (int i : face_vertices) {
    if (i < 0 || i >= static_cast<int>(p.vertices.size()))
      throw Error("BadParams", "face vertex id out of range");
    pts.push_back(p.vertices[i]);
  }
  RatVec x = foot_of_perpendicular(p.center, pts);
  if (norm2(vsub(x, p.center)) != r2) return std::nullopt;
  if (!in_relative_interior(x, pts)) return std::nullopt;
  return x;
}

TangencyReport is_t_tangent(const VHPolytope& p0, int t, const Rat& r2) {
  VHPolytope certified;
  const VHPolytope* pp = &p0;
  if (!p0.certified) {
    certified = validate(p0);
    pp = &certified;
  }
  const VHPolytope& p = *pp;
  TangencyReport rep;
  const int d = p.dim;
  if (t < 0 || t > d - 1) {
    rep.detail = "no faces of dimension " + std::to_string(t);
    return rep;
  }
  for (int e : p.faces->poset.rank_elements(t + 1)) {
    std::vector<int> ids;
    const Bits& vs = p.faces->vertex_sets[e];
    for (auto i = vs.find_first(); i != Bits::npos; i = vs.find_next(i))
      ids.push_back(static_cast<int>(i));
    auto x = tangency_point(p, ids, r2);
    if (!x) {
      rep.detail = "face " + std::to_string(e) + " is not tangent";
      return rep;
    }
    rep.points.emplace(e, std::move(*x));
  }
  if (t >= 1) {
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      if (norm2(vsub(p.vertices[i], p.center)) <= r2) {
        rep.points.clear();
        rep.detail = "vertex " + std::to_string(i) + " is not outside the sphere";
        return rep;
      }
    }
  }
  if (t <= d - 2) {
    for (size_t f = 0; f < p.facets.size(); ++f) {
      std::vector<RatVec> pts;
      const Bits& vs = p.facet_vertices[f];
      for (auto i = vs.find_first(); i != Bits::npos; i = vs.find_next(i))
        pts.push_back(p.vertices[i]);
      RatVec foot = foot_of_perpendicular(p.center, pts);
      if (norm2(vsub(foot, p.center)) >= r2) {
        rep.points.clear();
        rep.detail = "facet " + std::to_string(f) + " does not cut the sphere";
        return rep;
      }
    }
  }
  rep.tangent = true;
  return rep;
}

VHPolytope et_realization(const VHPolytope& p0, int t, const Rat& r2) {
  VHPolytope certified;
  const VHPolytope* pp = &p0;
  if (!p0.certified) {
    certified = validate(p0);
    pp = &certified;
  }
  const VHPolytope& p = *pp;
  auto rep = is_t_tangent(p, t, r2);
  if (!rep.tangent) throw Error("NotTangent", rep.detail);
  VHPolytope pol = polar(p, r2);

  const int nv = static_cast<int>(p.vertices.size());
  const int nf = static_cast<int>(p.facets.size());
  VHPolytope q;
  q.ambient = p.ambient;
  q.hull = p.hull;
  q.center = p.center;
  q.r2 = r2;
  q.vertices = p.vertices;
  q.vertices.insert(q.vertices.end(), pol.vertices.begin(), pol.vertices.end());

  // One facet per t-face, through its tangency point, orthogonal to the
  // radius there; incident vertices must be exactly the face's own
  // vertices plus the polar vertices of the facets containing it.
  std::vector<int> tfaces;
  for (int e : p.faces->poset.rank_elements(t + 1)) tfaces.push_back(e);
  for (int e : tfaces) {
    const RatVec& x = rep.points.at(e);
    RatVec a = vsub(x, p.center);
    Rat b = r2 + dot(a, p.center);
    Hyperplane h{a, b};

    Bits expected(nv + nf);
    const Bits& vs = p.faces->vertex_sets[e];
    for (auto i = vs.find_first(); i != Bits::npos; i = vs.find_next(i))
      expected.set(i);
    for (int f = 0; f < nf; ++f) {
      if (vs.is_subset_of(p.facet_vertices[f])) expected.set(nv + f);
    }
    Bits actual(nv + nf);
    for (int i = 0; i < nv + nf; ++i) {
      Side s = side(h, q.vertices[i]);
      if (s == Side::Beyond)
        throw Error("FacetViolated", "vertex " + std::to_string(i) +
                                         " lies beyond the facet of face " +
                                         std::to_string(e));
      if (s == Side::On) actual.set(i);
    }
    if (actual != expected)
      throw Error("FacetViolated",
                  "facet of face " + std::to_string(e) +
                      " meets the wrong vertex set");
    q.facets.push_back(std::move(h));
  }
  return validate(std::move(q));
}

}  // namespace etlib
