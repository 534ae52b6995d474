#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "corpus.hpp"
#include "etlib/poset.hpp"

using namespace etlib;
using testcorpus::cross_lattice;
using testcorpus::cube_lattice;
using testcorpus::octahedron_lattice;

namespace {

GradedPoset three_chain() {
  return GradedPoset::from_covers({0, 1, 2}, {{0, 1}, {1, 2}});
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("from_covers accepts chains and boolean lattices") {
  auto c = three_chain();
  CHECK(c.length() == 2);
  CHECK(c.size() == 3);
  CHECK(c.bottom() == 0);
  CHECK(c.top() == 2);
  CHECK(c.leq(0, 2));

  auto b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.length() == 3);
  CHECK(b3.rank(0b101) == 2);
  CHECK(b3.leq(0b001, 0b011));
  CHECK(!b3.leq(0b001, 0b010));
}

TEST_CASE("from_covers rejects malformed input") {
  CHECK(code_of([] { GradedPoset::from_covers({0, 2}, {{0, 1}}); }) == "RankSkip");
  CHECK(code_of([] { GradedPoset::from_covers({0, 0, 1}, {{0, 2}, {1, 2}}); }) ==
        "NoBoundedBottom");
  CHECK(code_of([] { GradedPoset::from_covers({0, 1, 1}, {{0, 1}, {0, 2}}); }) == "NoBoundedTop");
  CHECK(code_of([] { GradedPoset::from_covers({}, {}); }) == "NoBoundedBottom");
}

TEST_CASE("face lattice closure sizes on small polytopes") {
  // square: 4 vertices, 4 edges
  std::vector<Bits> square;
  for (int e = 0; e < 4; ++e) {
    Bits f(4);
    f.set(e);
    f.set((e + 1) % 4);
    square.push_back(f);
  }
  auto sq = face_lattice_from_incidence(4, square);
  CHECK(sq.poset.size() == 10);
  CHECK(sq.poset.length() == 3);

  // tetrahedron: facets are the 3-element subsets
  std::vector<Bits> tet;
  for (int drop = 0; drop < 4; ++drop) {
    Bits f(4);
    f.set();
    f.reset(drop);
    tet.push_back(f);
  }
  auto t = face_lattice_from_incidence(4, tet);
  CHECK(t.poset.size() == 16);
  CHECK(are_isomorphic(t.poset, boolean_lattice(4)));
}

TEST_CASE("octahedron closure agrees with the all-subsets oracle") {
  // oracle: intersect every one of the 2^8 facet subsets directly
  std::vector<Bits> facets;
  for (int eps = 0; eps < 8; ++eps) {
    Bits f(6);
    for (int i = 0; i < 3; ++i) f.set(((eps >> i) & 1) ? i : 3 + i);
    facets.push_back(f);
  }
  std::set<Bits> oracle;
  for (int sub = 0; sub < (1 << 8); ++sub) {
    Bits acc(6);
    acc.set();
    for (int j = 0; j < 8; ++j)
      if (sub & (1 << j)) acc &= facets[j];
    oracle.insert(acc);
  }
  oracle.insert(Bits(6));  // closure adds the empty face explicitly
  CHECK(oracle.size() == 28);

  auto oct = octahedron_lattice();
  CHECK(oct.poset.size() == 28);
  std::set<Bits> produced(oct.vertex_sets.begin(), oct.vertex_sets.end());
  CHECK(produced == oracle);

  auto fv = flag_vector(oct.poset);
  CHECK(fv.f == std::vector<long long>{1, 6, 12, 8, 1});
}

TEST_CASE("face lattice rejects non-polytopal incidence") {
  std::vector<Bits> facets;
  Bits f(3);
  f.set(0);
  facets.push_back(f);  // vertex 1,2 on no facet
  CHECK(code_of([&] { face_lattice_from_incidence(3, facets); }) == "NotGraded");
}

TEST_CASE("opposite reverses ranks and f-vectors") {
  auto oct = octahedron_lattice().poset;
  auto op = opposite(oct);
  auto fv = flag_vector(oct).f;
  auto gv = flag_vector(op).f;
  std::reverse(gv.begin(), gv.end());
  CHECK(fv == gv);
  CHECK(are_isomorphic(opposite(boolean_lattice(3)), boolean_lattice(3)));
  CHECK(are_isomorphic(opposite(op), oct));
}

TEST_CASE("interval restriction") {
  auto b3 = boolean_lattice(3);
  auto whole = interval_poset(b3, b3.bottom(), b3.top());
  CHECK(are_isomorphic(whole.poset, b3));

  auto cube = cube_lattice(3);
  int vertex = cube.poset.rank_elements(1).front();
  auto figure = interval_poset(cube.poset, vertex, cube.poset.top());
  CHECK(flag_vector(figure.poset).f == std::vector<long long>{1, 3, 3, 1});

  auto point = interval_poset(b3, 1, 1);
  CHECK(point.poset.size() == 1);
  CHECK(code_of([&] { interval_poset(b3, b3.top(), b3.bottom()); }) == "NotComparable");
}

TEST_CASE("meet join and is_lattice") {
  auto b4 = boolean_lattice(4);
  CHECK(is_lattice(b4));
  CHECK(*meet(b4, 0b0110, 0b0011) == 0b0010);
  CHECK(*join(b4, 0b0110, 0b0011) == 0b0111);

  // bowtie: two rank-1 elements both below two rank-2 elements
  GradedPoset bowtie = GradedPoset::from_covers(
      {0, 1, 1, 2, 2, 3},
      {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK(!is_lattice(bowtie));
  CHECK(!join(bowtie, 1, 2).has_value());

  CHECK(is_lattice(octahedron_lattice().poset));
}

TEST_CASE("moebius on chains and boolean lattices") {
  for (int n = 1; n <= 5; ++n) {
    auto b = boolean_lattice(n);
    CHECK(moebius(b, b.bottom(), b.top()) == (n % 2 == 0 ? 1 : -1));
  }
  auto c = three_chain();
  CHECK(moebius(c, 0, 0) == 1);
  CHECK(moebius(c, 0, 2) == 0);  // != (-1)^2, the chain is not Eulerian
  CHECK(code_of([&] { moebius(c, 2, 0); }) == "NotComparable");
}

TEST_CASE("eulerian predicate") {
  CHECK(is_eulerian(boolean_lattice(3)));
  CHECK(is_eulerian(boolean_lattice(6)));
  CHECK(!is_eulerian(three_chain()));

  // oracle for the octahedron: rescan every interval using the vertex-set
  // order rather than the poset closure
  auto oct = octahedron_lattice();
  const auto& vs = oct.vertex_sets;
  int n = oct.poset.size();
  bool ok = true;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (x == z || !vs[x].is_subset_of(vs[z])) continue;
      if (vs[x] == vs[z]) continue;
      int even = 0, odd = 0;
      for (int w = 0; w < n; ++w)
        if (vs[x].is_subset_of(vs[w]) && vs[w].is_subset_of(vs[z]))
          (oct.poset.rank(w) % 2 == 0 ? even : odd)++;
      if (even != odd) ok = false;
    }
  CHECK(ok);
  CHECK(is_eulerian(oct.poset));
}

TEST_CASE("flag numbers on the simplex lattice") {
  auto b5 = boolean_lattice(5);

  // oracle: count subset chains directly
  long long f13 = 0;
  for (int x = 0; x < 32; ++x)
    for (int y = 0; y < 32; ++y)
      if (__builtin_popcount(x) == 2 && __builtin_popcount(y) == 4 && (x & ~y) == 0) ++f13;
  CHECK(f13 == 30);

  CHECK(flag_number(b5, {1, 3}) == 30);
  CHECK(flag_number(b5, {0, 3}) == 20);
  CHECK(flag_number(b5, {0, 2}) == 30);
  CHECK(flag_number(b5, {}) == 1);
  CHECK(flag_number(b5, {-1, 4}) == 1);   // bottom/top indices are redundant
  CHECK(flag_number(b5, {0, 1, 2, 3}) == 120);
  CHECK(code_of([&] { flag_number(b5, {5}); }) == "BadRankIndex");

  auto fv = flag_vector(b5);
  CHECK(fv.f == std::vector<long long>{1, 5, 10, 10, 5, 1});
  CHECK(fv.flag.at({0, 3}) == 20);
  CHECK(fv.flag.at({1, 2}) == 30);
}

TEST_CASE("generalized Dehn-Sommerville identities on Eulerian lattices") {
  auto check_eq1_eq2 = [](const GradedPoset& p) {
    int d = p.length() - 1;
    for (int j = 0; j <= d; ++j) {
      long long s = 0;
      for (int i = -1; i <= j; ++i)
        s += ((i % 2 == 0) ? 1 : -1) * flag_number(p, {i, j});
      CHECK(s == 0);
    }
    for (int i = 0; i <= d; ++i) {
      long long s = 0;
      for (int j = i; j <= d; ++j)
        s += ((j % 2 == 0) ? 1 : -1) * flag_number(p, {i, j});
      CHECK(s == (i == d ? (d % 2 == 0 ? 1 : -1) : 0));
    }
  };
  check_eq1_eq2(boolean_lattice(5));
  check_eq1_eq2(octahedron_lattice().poset);
  check_eq1_eq2(cube_lattice(4).poset);
}

TEST_CASE("fatness") {
  CHECK(fatness(boolean_lattice(5)) == Rat(2));
  FlagVector fv;
  fv.d = 4;
  fv.f = {1, 24, 96, 96, 24, 1};
  CHECK(fatness(fv) == Rat(4));
  fv.f = {1, 762, 3540, 3540, 762, 1};
  CHECK(fatness(fv) == Rat(7080, 1524));
  FlagVector bad;
  bad.d = 3;
  bad.f = {1, 4, 6, 4, 1};
  CHECK(code_of([&] { fatness(bad); }) == "WrongDimension");
}

TEST_CASE("simpliciality profile") {
  auto b5 = boolean_lattice(5);
  auto p = simpliciality_profile(b5);
  CHECK(p.max_simplicial == 3);
  CHECK(p.max_simple == 3);
  CHECK(p.is_boolean);

  auto cross4 = cross_lattice(4);
  auto q = simpliciality_profile(cross4.poset);
  CHECK(q.max_simplicial == 3);
  CHECK(q.max_simple == 1);
  CHECK(!q.is_boolean);

  auto cube3 = cube_lattice(3);
  auto r = simpliciality_profile(cube3.poset);
  CHECK(r.max_simplicial == 1);
  CHECK(r.max_simple == 2);

  CHECK(code_of([&] { simpliciality_profile(three_chain()); }) == "NotEulerian");

  // binomial lower bound: counts at each rank dominate binomial(length, i)
  auto oct = octahedron_lattice().poset;
  auto fv = flag_vector(oct).f;
  long long binom[5] = {1, 4, 6, 4, 1};
  for (int i = 0; i <= 4; ++i) CHECK(fv[i] >= binom[i]);
}

TEST_CASE("isomorphism search") {
  auto cube = cube_lattice(3).poset;
  auto oct = octahedron_lattice().poset;
  CHECK(!are_isomorphic(cube, oct));
  CHECK(are_isomorphic(cube, opposite(oct)));

  auto m = isomorphism(cube, opposite(oct));
  REQUIRE(m.has_value());
  auto opp = opposite(oct);
  for (int x = 0; x < cube.size(); ++x) {
    CHECK(cube.rank(x) == opp.rank((*m)[x]));
    for (int y = 0; y < cube.size(); ++y)
      if (cube.leq(x, y)) CHECK(opp.leq((*m)[x], (*m)[y]));
  }

  CHECK(are_isomorphic(oct, opposite(opposite(oct))));
  CHECK(!are_isomorphic(boolean_lattice(4), cube_lattice(4).poset));
}

TEST_CASE("boolean interval test") {
  auto cube = cube_lattice(3);
  CHECK(is_boolean_interval(cube.poset, cube.poset.bottom(),
                            cube.poset.rank_elements(2).front()));
  CHECK(!is_boolean_interval(cube.poset, cube.poset.bottom(), cube.poset.top()));
  auto oct = octahedron_lattice();
  CHECK(is_boolean_interval(oct.poset, oct.poset.bottom(), oct.poset.top()) == false);
  for (int f : oct.poset.rank_elements(3))
    CHECK(is_boolean_interval(oct.poset, oct.poset.bottom(), f));
}
