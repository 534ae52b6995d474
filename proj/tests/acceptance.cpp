// Reproduction gate: one line per criterion, exit 0 iff every line passes.
// ET_SEED overrides the seed of the randomized round-trip harness.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "etlib/constructions.hpp"
#include "etlib/et.hpp"
#include "etlib/geometry.hpp"
#include "etlib/poset.hpp"
#include "etlib/subdivision.hpp"
#include "etlib/tables.hpp"

using namespace etlib;

namespace {

int failures = 0;

void line(int num, bool pass, const std::string& detail) {
  std::cout << "criterion " << std::setw(2) << num << ": " << (pass ? "PASS" : "FAIL")
            << " - " << detail << std::endl;
  if (!pass) ++failures;
}

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Entry {
  std::string name;
  GradedPoset l;
  int d = 0;
  std::vector<EtResult> ets;  // one per t = 0..d-1, filled by criterion 1
};

std::vector<Entry> corpus;

void build_corpus() {
  auto add = [&](const std::string& name, GradedPoset l) {
    Entry e{name, std::move(l)};
    e.d = e.l.length() - 1;
    corpus.push_back(std::move(e));
  };
  for (int n = 3; n <= 6; ++n) add("B" + std::to_string(n), boolean_lattice(n));
  for (int d = 3; d <= 5; ++d)
    add("cube" + std::to_string(d), generate("cube", d).faces->poset);
  for (int d = 3; d <= 5; ++d)
    add("cross" + std::to_string(d), generate("cross", d).faces->poset);
  add("K_2^4", generate("hypersimplex", 4, 2).faces->poset);
  add("K_2^5", generate("hypersimplex", 5, 2).faces->poset);
  add("prism/D3", generate("prism_over_simplex", 4).faces->poset);
  add("P^4_1", build_truncatable_stacked(4, {0}).polytope.faces->poset);
  add("P^4_2", build_truncatable_stacked(4, {0, 4}).polytope.faces->poset);
  add("C^4_2", build_cross_stack(2, false).polytope.faces->poset);
}

std::vector<long long> pflags(const GradedPoset& p) {
  FlagVector fv = flag_vector(p);
  std::vector<long long> out;
  for (int i = 0; i < fv.d; ++i) out.push_back(fv.fi(i));
  return out;
}

std::string vec_str(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void c1_eulerian() {
  auto t0 = std::chrono::steady_clock::now();
  build_corpus();
  int pairs = 0, bad = 0;
  for (Entry& e : corpus)
    for (int t = 0; t < e.d; ++t) {
      e.ets.push_back(et(e.l, t));
      ++pairs;
      if (!is_eulerian(e.ets.back().poset)) ++bad;
    }
  double dt = secs_since(t0);
  std::ostringstream os;
  os << corpus.size() << " lattices, " << pairs << " (L,t) pairs, " << bad
     << " non-eulerian outputs, " << std::fixed << std::setprecision(1) << dt << "s";
  line(1, bad == 0 && corpus.size() >= 12 && dt < 60.0, os.str());
}

void c2_formula() {
  int pairs = 0, bad = 0;
  for (const Entry& e : corpus)
    for (int t = 0; t < e.d; ++t) {
      ++pairs;
      if (et_fvector_formula(e.l, t) != flag_vector(e.ets[t].poset).f) ++bad;
    }
  line(2, bad == 0,
       std::to_string(pairs) + " f-vectors from flag counts, " + std::to_string(bad) +
           " mismatches");
}

void c3_boundaries() {
  int checks = 0, bad = 0;
  for (const Entry& e : corpus) {
    GradedPoset opp = opposite(e.l);
    ++checks;
    if (!are_isomorphic(e.ets[0].poset, opp)) ++bad;
    ++checks;
    if (!are_isomorphic(e.ets[e.d - 1].poset, e.l)) ++bad;
    for (int t = 0; t < e.d; ++t) {
      ++checks;
      if (!are_isomorphic(e.ets[t].poset, et(opp, e.d - 1 - t).poset)) ++bad;
    }
  }
  line(3, bad == 0,
       std::to_string(checks) + " isomorphism checks (t=0 dual, t=d-1 identity, dual rule), " +
           std::to_string(bad) + " failed");
}

void c4_simpliciality() {
  int pairs = 0, bad = 0;
  for (const Entry& e : corpus) {
    SimplicialityProfile in = simpliciality_profile(e.l);
    for (int t = 1; t <= e.d - 2; ++t) {
      ++pairs;
      int pred_simplicial = 0;
      for (int k = 0; k <= e.d - 2; ++k)
        if (std::min(k, t - 1) <= in.max_simplicial && std::min(k, e.d - t - 2) <= in.max_simple)
          pred_simplicial = k;
      int pred_simple = et_two_simple_criterion(e.l, t) ? 2 : 1;
      SimplicialityProfile out = simpliciality_profile(e.ets[t].poset);
      if (out.max_simplicial != pred_simplicial || out.max_simple != pred_simple ||
          out.max_simplicial > e.d - 2 || out.max_simple > 2)
        ++bad;
    }
  }
  line(4, bad == 0,
       std::to_string(pairs) +
           " profiles match the interval criteria; none (d-1)-simplicial or 3-simple; " +
           std::to_string(bad) + " violations");
}

void c5_catalog() {
  std::vector<std::string> problems;

  GradedPoset h = opposite(et(boolean_lattice(5), 1).poset);
  if (pflags(h) != std::vector<long long>{10, 30, 30, 10} || flag_number(h, {0, 3}) != 50)
    problems.push_back("dual of the simplex interval poset");

  EtResult c24 = et(generate("cube", 4).faces->poset, 2);
  if (pflags(c24.poset) != std::vector<long long>{24, 96, 96, 24} ||
      flag_number(c24.poset, {0, 3}) != 144 ||
      !are_isomorphic(c24.poset, opposite(c24.poset)))
    problems.push_back("4-cube middle interval poset / self-duality");

  GradedPoset pr = et(generate("prism_over_simplex", 4).faces->poset, 2).poset;
  if (pflags(pr) != std::vector<long long>{14, 48, 48, 14} || flag_number(pr, {0, 3}) != 76)
    problems.push_back("prism interval poset");

  for (int d = 3; d <= 6; ++d)
    for (int k = 1; k <= d; ++k)
      if (!are_isomorphic(opposite(generate("hypersimplex", d, k).faces->poset),
                          et(boolean_lattice(d + 1), k - 1).poset))
        problems.push_back("hypersimplex dual d=" + std::to_string(d) +
                           " k=" + std::to_string(k));

  for (int d = 4; d <= 5; ++d)
    if (!are_isomorphic(generate("M", d).faces->poset,
                        opposite(et(generate("cube", d).faces->poset, 2).poset)))
      problems.push_back("M^" + std::to_string(d));

  std::string detail = "hypersimplex duals d<=6, both M bodies, three flag rows";
  for (const std::string& p : problems) detail += "; FAILED " + p;
  line(5, problems.empty(), detail);
}

void c6_stacked_truncations() {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  std::vector<std::vector<int>> plans{{}, {0}, {0, 4}, {0, 4, 8}};
  for (int n = 0; n <= 3; ++n) {
    StackedFamily fam = build_truncatable_stacked(4, plans[n]);
    VHPolytope d1 = truncate_all(fam.polytope, fam.cuts);
    std::vector<long long> want{10 + 4 * n, 30 + 18 * n, 30 + 18 * n, 10 + 4 * n};
    SimplicialityProfile prof = simpliciality_profile(d1.faces->poset);
    bool ok = pflags(d1.faces->poset) == want &&
              flag_number(d1.faces->poset, {0, 3}) == 50 + 26 * n &&
              prof.max_simplicial >= 2 && prof.max_simple >= 2 &&
              are_isomorphic(d1.faces->poset, d_construction(fam.polytope.faces->poset, 1));
    if (!ok) ++bad;
  }
  double dt = secs_since(t0);
  std::ostringstream os;
  os << "rational vertex truncations of 4 stacked towers, 2-simplicial 2-simple, "
     << "lattices match the combinatorial model, " << std::fixed << std::setprecision(1) << dt
     << "s; " << bad << " failures";
  line(6, bad == 0 && dt < 120.0, os.str());
}

void c7_cross_towers() {
  std::vector<std::string> problems;
  std::string path = "geometric cuts certified for n=1,2,3";
  for (int n = 1; n <= 3; ++n) {
    StackedFamily fam = build_cross_stack(n, false);
    std::vector<long long> want{4 + 4LL * n, 6 + 18LL * n, 4 + 28LL * n, 2 + 14LL * n};
    if (pflags(fam.polytope.faces->poset) != want)
      problems.push_back("tower n=" + std::to_string(n) + " f-vector");

    if (n == 1) {
      VHPolytope d1 = truncate_all(fam.polytope, midpoint_cuts(fam.polytope));
      if (pflags(d1.faces->poset) != std::vector<long long>{24, 96, 96, 24} ||
          flag_number(d1.faces->poset, {0, 3}) != 144 ||
          !are_isomorphic(d1.faces->poset, generate("M", 4).faces->poset))
        problems.push_back("midpoint truncation of the single cross");
    }
    if (n == 3) {
      GradedPoset d1l = fam.cuts_certified
                            ? truncate_all(fam.polytope, fam.cuts).faces->poset
                            : d_construction(fam.polytope.faces->poset, 1);
      if (!fam.cuts_certified) path = "fallback: combinatorial model for n=3 (" + fam.note + ")";
      if (pflags(d1l) != std::vector<long long>{60, 264, 264, 60})
        problems.push_back("truncated tower n=3 flags");
    }
  }
  std::string detail = path;
  for (const std::string& p : problems) detail += "; FAILED " + p;
  line(7, problems.empty(), detail);
}

void c8_contrast_pair() {
  StackedFamily fam = build_truncatable_stacked(4, std::vector<int>(9, 0), "cross");
  std::vector<long long> body = pflags(fam.polytope.faces->poset);
  std::vector<long long> d1 = pflags(truncate_all(fam.polytope, fam.cuts).faces->poset);
  std::vector<long long> tower{60, 264, 264, 60};
  bool ok = body == std::vector<long long>{17, 60, 86, 43} &&
            d1 == std::vector<long long>{60, 258, 258, 60} && d1[0] == tower[0] &&
            d1[3] == tower[3] && d1[1] == d1[2] && d1[1] != tower[1];
  line(8, ok,
       "9-fold stacked cross " + vec_str(body) + ", truncation " + vec_str(d1) +
           " vs tower " + vec_str(tower) + ": equal ends, different equal middles");
}

void c9_realization() {
  VHPolytope r = et_realization(generate("cube", 4), 2, Rat(2));
  r = validate(std::move(r));
  bool sizes = r.vertices.size() == 24 && r.facets.size() == 24;
  bool six = true;
  for (const Bits& fv : r.facet_vertices) six = six && fv.count() == 6;
  bool iso = are_isomorphic(r.faces->poset, et(generate("cube", 4).faces->poset, 2).poset);
  line(9, sizes && six && iso,
       "edge-tangent realization validates: 24 vertices, 24 facets of 6 vertices, lattice "
       "matches the interval poset");
}

void c10_subdivision() {
  unsigned long long seed = 20260815ULL;
  if (const char* s = std::getenv("ET_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::mt19937_64 rng(seed);
  const int N = 1000;
  long long points = 0, bad = 0;
  int pairs = 0;
  for (const Entry& e : corpus) {
    for (int t = 0; t < e.d; ++t) {
      ++pairs;
      const EtResult& er = e.ets[t];
      for (int i = 0; i < N; ++i) {
        // random point of the order complex: maximal chain, random weights
        ChainPoint q;
        while (q.chain.empty()) {
          std::vector<int> chain;
          int cur = e.l.bottom();
          while (cur != e.l.top()) {
            const std::vector<int>& up = e.l.upper_covers(cur);
            cur = up[rng() % up.size()];
            if (cur != e.l.top()) chain.push_back(cur);
          }
          RatVec w(chain.size());
          Rat total = 0;
          for (Rat& x : w) {
            x = Rat(rng() % 5);
            total += x;
          }
          if (total == 0) continue;
          for (Rat& x : w) x /= total;
          q.chain = chain;
          q.weights = w;
        }
        ++points;
        ChainPoint up = pi_inverse(e.l, er, q);
        Rat total = 0;
        bool ok = true;
        for (const Rat& w : up.weights) {
          ok = ok && w > 0;
          total += w;
        }
        ok = ok && total == 1;
        for (size_t a = 0; a + 1 < up.chain.size() && ok; ++a)
          for (size_t b = a + 1; b < up.chain.size(); ++b)
            ok = ok && (er.poset.leq(up.chain[a], up.chain[b]) ||
                        er.poset.leq(up.chain[b], up.chain[a]));
        ok = ok && same_point(e.l, pi(e.l, er, up), q);
        if (!ok) ++bad;
      }
    }
  }
  std::ostringstream os;
  os << points << " exact round trips over " << pairs << " (L,t) pairs (" << N
     << " each), positive weights summing to 1 on chains, " << bad << " failures";
  line(10, bad == 0, os.str());
}

void c11_formula_suite() {
  std::vector<std::string> problems;
  for (long long n = 1; n <= 100; ++n) {
    FamilyValue v = eval_family("EQ", n, 4);
    if (v.f != std::vector<long long>{54 * n - 30, 252 * n - 156, 252 * n - 156, 54 * n - 30}) {
      problems.push_back("middle interval family at n=" + std::to_string(n));
      break;
    }
  }
  if (eval_family("D1C", 42).f != std::vector<long long>{762, 3540, 3540, 762})
    problems.push_back("truncated tower at n=42");
  if (eval_family("D1C", 577).f[0] != 10392) problems.push_back("truncated tower at n=577");
  if (fatness(generate("M", 4).faces->poset) != Rat(4) || Rat(96 + 96, 24 + 24) != 4)
    problems.push_back("fatness of (24,96,96,24)");
  std::string detail = "closed forms for n=1..100, two large instances, fatness 4";
  for (const std::string& p : problems) detail += "; FAILED " + p;
  line(11, problems.empty(), detail);
}

void c12_exclusion() {
  bool marked = family_table("Q", 4).source.find("formulas only") != std::string::npos &&
                family_table("EQ", 4).source.find("formulas only") != std::string::npos;
  line(12, marked,
       "the hyperbolic glued-cube tower is not constructed here; its f-vectors enter only "
       "as closed-form tables (criterion 11) and the family tables say so");
}

}  // namespace

int main() {
  try {
    c1_eulerian();
    c2_formula();
    c3_boundaries();
    c4_simpliciality();
    c5_catalog();
    c6_stacked_truncations();
    c7_cross_towers();
    c8_contrast_pair();
    c9_realization();
    c10_subdivision();
    c11_formula_suite();
    c12_exclusion();
  } catch (const Error& e) {
    std::cout << "unexpected error: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
