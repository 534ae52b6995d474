#include "etlib/geometry.hpp"

#include <functional>

#include "doctest.h"
#include "etlib/et.hpp"
#include "corpus.hpp"

using namespace etlib;

namespace {

std::string geo_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

RatVec rv(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

// [-1,1]^4; vertex m has coordinate i equal to +1 iff bit i of m is set,
// facets +x_i <= 1 for i = 0..3 followed by -x_i <= 1.
VHPolytope cube4() {
  VHPolytope p;
  p.ambient = 4;
  for (int m = 0; m < 16; ++m) {
    RatVec v(4);
    for (int i = 0; i < 4; ++i) v[i] = ((m >> i) & 1) ? 1 : -1;
    p.vertices.push_back(v);
  }
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < 4; ++i) {
      RatVec a(4, 0);
      a[i] = s ? -1 : 1;
      p.facets.push_back({a, 1});
    }
  return p;
}

// conv(+-e_i): vertices +e_1..+e_4 then -e_1..-e_4, one facet per sign
// vector <eps,x> <= 1, eps enumerated by bits.
VHPolytope cross4() {
  VHPolytope p;
  p.ambient = 4;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < 4; ++i) {
      RatVec v(4, 0);
      v[i] = s ? -1 : 1;
      p.vertices.push_back(v);
    }
  for (int eps = 0; eps < 16; ++eps) {
    RatVec a(4);
    for (int i = 0; i < 4; ++i) a[i] = ((eps >> i) & 1) ? 1 : -1;
    p.facets.push_back({a, 1});
  }
  return p;
}

// Regular 4-simplex conv(e_1..e_5) inside the hull sum x_i = 1.
VHPolytope simplex4() {
  VHPolytope p;
  p.ambient = 5;
  p.hull.push_back({RatVec(5, 1), 1});
  for (int i = 0; i < 5; ++i) {
    RatVec v(5, 0);
    v[i] = 1;
    p.vertices.push_back(v);
    RatVec a(5, 0);
    a[i] = -1;
    p.facets.push_back({a, 0});
  }
  return p;
}

std::vector<long long> proper_f(const GradedPoset& p) {
  auto fv = flag_vector(p);
  return std::vector<long long>(fv.f.begin() + 1, fv.f.end() - 1);
}

}  // namespace

TEST_CASE("hyperplane sidedness") {
  Hyperplane h{rv({1, 0, 0, 0}), 1};
  CHECK(side(h, rv({2, 0, 0, 0})) == Side::Beyond);
  CHECK(side(h, rv({1, 0, 0, 0})) == Side::On);
  CHECK(side(h, rv({0, 0, 0, 0})) == Side::Beneath);
  CHECK(geo_code_of([&] { side(h, rv({1, 0})); }) == "DimensionMismatch");
}

TEST_CASE("validate certifies the 4-cube") {
  auto p = validate(cube4());
  CHECK(p.certified);
  CHECK(p.dim == 4);
  CHECK(p.center == RatVec(4, 0));
  CHECK(p.faces->poset.length() == 5);
  CHECK(proper_f(p.faces->poset) == std::vector<long long>{16, 32, 24, 8});
  for (const auto& fb : p.facet_vertices) CHECK(fb.count() == 8);
  for (int f = 0; f < 8; ++f)
    for (int v = 0; v < 16; ++v) {
      bool expect = dot(p.facets[f].a, p.vertices[v]) == p.facets[f].b;
      CHECK(p.facet_vertices[f].test(v) == expect);
      CHECK(p.vertex_facets[v].test(f) == expect);
    }
}

TEST_CASE("validate certifies the 4-dimensional cross polytope") {
  auto p = validate(cross4());
  CHECK(p.dim == 4);
  CHECK(proper_f(p.faces->poset) == std::vector<long long>{8, 24, 32, 16});
}

TEST_CASE("validate canonicalizes facets into the hull") {
  auto p = validate(simplex4());
  CHECK(p.dim == 4);
  CHECK(p.center == RatVec(5, Rat(1, 5)));
  for (int i = 0; i < 5; ++i) {
    // -x_i <= 0 projected into sum x = 1 and scaled primitive
    RatVec expect(5, 1);
    expect[i] = -4;
    CHECK(p.facets[i].a == expect);
    CHECK(p.facets[i].b == 1);
    CHECK(dot(p.facets[i].a, p.hull[0].a) == 0);
  }
  CHECK(proper_f(p.faces->poset) == std::vector<long long>{5, 10, 10, 5});
}

TEST_CASE("validate rejects broken polytopes") {
  CHECK(geo_code_of([] {
          auto p = cube4();
          p.facets[0].b = 2;  // loosened, supports nothing
          validate(p);
        }) == "DanglingFacet");
  CHECK(geo_code_of([] {
          auto p = cube4();
          p.vertices.push_back(rv({2, 0, 0, 0}));
          validate(p);
        }) == "VertexOutside");
  CHECK(geo_code_of([] {
          auto p = simplex4();
          p.vertices.push_back(rv({1, 1, 0, 0, 0}));  // off the hull
          validate(p);
        }) == "VertexOutside");
  CHECK(geo_code_of([] {
          auto p = cross4();
          p.facets.pop_back();  // face structure no longer closes up
          validate(p);
        }) == "NotEulerianIncidence");
  CHECK(geo_code_of([] {
          auto p = cube4();
          p.vertices.push_back(p.vertices[0]);
          validate(p);
        }) == "NotEulerianIncidence");
  CHECK(geo_code_of([] {
          auto p = cube4();
          p.facets.push_back({rv({1, 1, 0, 0}), 2});  // supports only a 2-face
          validate(p);
        }) == "DanglingFacet");
  CHECK(geo_code_of([] {
          auto p = cube4();
          p.facets.push_back(p.facets[0]);
          validate(p);
        }) == "DanglingFacet");
}

TEST_CASE("polar of the standard bodies") {
  auto p = validate(cube4());
  auto q = polar(p, 2);
  REQUIRE(q.vertices.size() == 8);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < 4; ++i) {
      RatVec w(4, 0);
      w[i] = s ? -2 : 2;
      CHECK(q.vertices[4 * s + i] == w);
    }
  // incidence transposes
  for (int f = 0; f < 8; ++f)
    for (int v = 0; v < 16; ++v)
      CHECK(q.facet_vertices[v].test(f) == p.facet_vertices[f].test(v));

  auto c = validate(cross4());
  auto qc = polar(c, Rat(1, 2));
  REQUIRE(qc.vertices.size() == 16);
  for (int j = 0; j < 16; ++j)
    CHECK(qc.vertices[j] == vscale(Rat(1, 2), c.facets[j].a));
  CHECK(proper_f(qc.faces->poset) == std::vector<long long>{16, 32, 24, 8});

  CHECK(geo_code_of([&] { polar(p, 0); }) == "BadParams");
  CHECK(geo_code_of([&] {
          auto bad = cube4();
          bad.center = rv({1, 0, 0, 0});  // on a facet
          polar(bad, 1);
        }) == "CenterNotInterior");
}

TEST_CASE("polarity is an involution and anti-isomorphism") {
  struct Case {
    VHPolytope p;
    Rat r2;
  };
  std::vector<Case> cases;
  cases.push_back({validate(cube4()), 2});
  cases.push_back({validate(cross4()), Rat(1, 2)});
  cases.push_back({validate(simplex4()), Rat(3, 10)});
  for (const auto& cs : cases) {
    auto q = polar(cs.p, cs.r2);
    auto back = polar(q, cs.r2);
    CHECK(back.vertices == cs.p.vertices);
    REQUIRE(back.facets.size() == cs.p.facets.size());
    for (size_t f = 0; f < back.facets.size(); ++f) {
      CHECK(back.facets[f].a == cs.p.facets[f].a);
      CHECK(back.facets[f].b == cs.p.facets[f].b);
    }
    CHECK(are_isomorphic(q.faces->poset, opposite(cs.p.faces->poset)));
  }
}

TEST_CASE("foot of perpendicular and relative interior") {
  std::vector<RatVec> face = {rv({1, 1, 1, 1}), rv({1, 1, 1, -1}),
                              rv({1, 1, -1, 1}), rv({1, 1, -1, -1})};
  RatVec origin(4, 0);
  CHECK(foot_of_perpendicular(origin, face) == rv({1, 1, 0, 0}));
  CHECK(foot_of_perpendicular(origin, {rv({3, 4, 0, 0})}) == rv({3, 4, 0, 0}));
  // affinely dependent spanning set is fine
  auto redundant = face;
  redundant.push_back(rv({1, 1, 0, 0}));
  CHECK(foot_of_perpendicular(origin, redundant) == rv({1, 1, 0, 0}));
  CHECK(geo_code_of([&] { foot_of_perpendicular(origin, {}); }) == "DegenerateFace");

  CHECK(in_relative_interior(rv({1, 1, 0, 0}), face));
  CHECK_FALSE(in_relative_interior(rv({1, 1, 1, 0}), face));  // edge point
  CHECK_FALSE(in_relative_interior(rv({1, 1, 2, 0}), face));
  CHECK_FALSE(in_relative_interior(rv({0, 1, 0, 0}), face));  // off the plane
  std::vector<RatVec> seg = {rv({0, 0, 0, 0}), rv({2, 0, 0, 0})};
  CHECK(in_relative_interior(rv({1, 0, 0, 0}), seg));
  CHECK_FALSE(in_relative_interior(rv({2, 0, 0, 0}), seg));
  CHECK(in_relative_interior(rv({3, 4, 0, 0}), {rv({3, 4, 0, 0})}));
}

TEST_CASE("tangency points") {
  auto p = validate(cube4());
  std::vector<int> face = {3, 7, 11, 15};  // x_1 = x_2 = 1
  auto x = tangency_point(p, face, 2);
  REQUIRE(x.has_value());
  CHECK(*x == rv({1, 1, 0, 0}));
  CHECK_FALSE(tangency_point(p, face, 1).has_value());

  auto c = validate(cross4());
  auto m = tangency_point(c, {0, 1}, Rat(1, 2));
  REQUIRE(m.has_value());
  CHECK(*m == RatVec{Rat(1, 2), Rat(1, 2), 0, 0});
  CHECK_FALSE(tangency_point(c, {0, 1}, 1).has_value());

  CHECK(geo_code_of([&] { tangency_point(p, {}, 1); }) == "DegenerateFace");
}

TEST_CASE("t-tangency certification") {
  auto p = validate(cube4());
  auto rep = is_t_tangent(p, 2, 2);
  CHECK(rep.tangent);
  CHECK(rep.points.size() == 24);
  for (const auto& [e, x] : rep.points) {
    CHECK(norm2(vsub(x, p.center)) == 2);
    CHECK(p.faces->poset.rank(e) == 3);
  }
  CHECK_FALSE(is_t_tangent(p, 1, 2).tangent);
  CHECK_FALSE(is_t_tangent(p, 7, 2).tangent);

  auto s = validate(simplex4());
  CHECK(is_t_tangent(s, 1, Rat(3, 10)).tangent);
  CHECK_FALSE(is_t_tangent(s, 1, Rat(1, 3)).tangent);

  auto c = validate(cross4());
  CHECK(is_t_tangent(c, 1, Rat(1, 2)).tangent);

  // polar of a t-tangent body is (d-1-t)-tangent to the same sphere
  CHECK(is_t_tangent(polar(p, 2), 1, 2).tangent);
  CHECK(is_t_tangent(polar(c, Rat(1, 2)), 2, Rat(1, 2)).tangent);
  CHECK(is_t_tangent(polar(s, Rat(3, 10)), 2, Rat(3, 10)).tangent);
}

TEST_CASE("tangent realization") {
  auto p = validate(cube4());
  auto r = et_realization(p, 2, 2);
  CHECK(r.vertices.size() == 24);
  CHECK(r.facets.size() == 24);
  for (const auto& fb : r.facet_vertices) CHECK(fb.count() == 6);
  auto expected = et(testcorpus::cube_lattice(4).poset, 2);
  CHECK(are_isomorphic(r.faces->poset, expected.poset));

  auto s = validate(simplex4());
  auto rs = et_realization(s, 1, Rat(3, 10));
  CHECK(rs.vertices.size() == 10);
  CHECK(rs.facets.size() == 10);
  CHECK(proper_f(rs.faces->poset) == std::vector<long long>{10, 30, 30, 10});
  CHECK(are_isomorphic(rs.faces->poset, et(boolean_lattice(5), 1).poset));

  CHECK(geo_code_of([&] { et_realization(p, 1, 2); }) == "NotTangent");
}
