#include "etlib/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace etlib {

GradedPoset GradedPoset::from_covers(std::vector<int> ranks,
                                     const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(ranks.size());
  if (n == 0) throw Error("NoBoundedBottom", "empty element set");
  GradedPoset p;
  p.ranks_ = std::move(ranks);
  for (int r : p.ranks_) {
    if (r < 0) throw Error("NotGraded", "negative rank");
    p.length_ = std::max(p.length_, r);
  }
  p.ucov_.resize(n);
  p.lcov_.resize(n);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error("NotGraded", "cover references unknown element");
    if (p.ranks_[b] != p.ranks_[a] + 1)
      throw Error("RankSkip", "cover " + std::to_string(a) + "<" + std::to_string(b) +
                                  " spans ranks " + std::to_string(p.ranks_[a]) + ".." +
                                  std::to_string(p.ranks_[b]));
    p.ucov_[a].push_back(b);
    p.lcov_[b].push_back(a);
  }
  for (int x = 0; x < n; ++x) {
    auto dedupe = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(p.ucov_[x]);
    dedupe(p.lcov_[x]);
  }

  // Unique minimum at rank 0 and unique maximum at the top rank; everything
  // else covers downward and is covered upward, so all maximal chains run the
  // full rank range.
  int nmin = 0, nmax = 0;
  for (int x = 0; x < n; ++x) {
    if (p.lcov_[x].empty()) {
      ++nmin;
      p.bottom_ = x;
    }
    if (p.ucov_[x].empty()) {
      ++nmax;
      p.top_ = x;
    }
  }
  if (nmin != 1) throw Error("NoBoundedBottom", std::to_string(nmin) + " minimal elements");
  if (nmax != 1) throw Error("NoBoundedTop", std::to_string(nmax) + " maximal elements");
  if (p.ranks_[p.bottom_] != 0) throw Error("NotGraded", "minimum has nonzero rank");
  if (p.ranks_[p.top_] != p.length_) throw Error("NotGraded", "maximum not at top rank");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.ranks_[a] < p.ranks_[b]; });

  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    p.up_[x].set(x);
    for (int y : p.ucov_[x]) p.up_[x] |= p.up_[y];
  }
  for (int x : order) {
    p.down_[x].set(x);
    for (int y : p.lcov_[x]) p.down_[x] |= p.down_[y];
  }
  p.rank_mask_.assign(p.length_ + 1, Bits(n));
  for (int x = 0; x < n; ++x) p.rank_mask_[p.ranks_[x]].set(x);
  return p;
}

std::vector<int> GradedPoset::rank_elements(int r) const {
  std::vector<int> out;
  if (r < 0 || r > length_) return out;
  const Bits& m = rank_mask_[r];
  for (auto i = m.find_first(); i != Bits::npos; i = m.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

SubPoset interval_poset(const GradedPoset& p, int x, int z) {
  if (!p.leq(x, z))
    throw Error("NotComparable", std::to_string(x) + " not below " + std::to_string(z));
  Bits members = p.up_set(x) & p.down_set(z);
  SubPoset sub;
  std::vector<int> local(p.size(), -1);
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) {
    local[i] = static_cast<int>(sub.orig.size());
    sub.orig.push_back(static_cast<int>(i));
  }
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  for (int o : sub.orig) {
    ranks.push_back(p.rank(o) - p.rank(x));
    for (int u : p.upper_covers(o))
      if (local[u] >= 0) covers.emplace_back(local[o], local[u]);
  }
  sub.poset = GradedPoset::from_covers(std::move(ranks), covers);
  return sub;
}

GradedPoset opposite(const GradedPoset& p) {
  std::vector<int> ranks(p.size());
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < p.size(); ++x) {
    ranks[x] = p.length() - p.rank(x);
    for (int u : p.upper_covers(x)) covers.emplace_back(u, x);
  }
  return GradedPoset::from_covers(std::move(ranks), covers);
}

namespace {

// Greatest element of a down-closed candidate set, or -1: the unique top-rank
// element that contains the whole set.
int extremum(const GradedPoset& p, const Bits& cand, bool upWards) {
  if (cand.none()) return -1;
  for (int r = 0; r <= p.length(); ++r) {
    int rr = upWards ? r : p.length() - r;
    Bits level = cand & p.rank_mask(rr);
    if (level.none()) continue;
    auto first = level.find_first();
    if (level.find_next(first) != Bits::npos) return -1;
    int u = static_cast<int>(first);
    const Bits& closure = upWards ? p.up_set(u) : p.down_set(u);
    return cand.is_subset_of(closure) ? u : -1;
  }
  return -1;
}

}  // namespace

std::optional<int> meet(const GradedPoset& p, int x, int y) {
  int m = extremum(p, p.down_set(x) & p.down_set(y), false);
  if (m < 0) return std::nullopt;
  return m;
}

std::optional<int> join(const GradedPoset& p, int x, int y) {
  int j = extremum(p, p.up_set(x) & p.up_set(y), true);
  if (j < 0) return std::nullopt;
  return j;
}

bool is_lattice(const GradedPoset& p) {
  // A finite bounded poset with all pairwise meets is a lattice.
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!meet(p, x, y)) return false;
  return true;
}

long long moebius(const GradedPoset& p, int x, int y) {
  if (!p.leq(x, y))
    throw Error("NotComparable", std::to_string(x) + " not below " + std::to_string(y));
  Bits members = p.up_set(x) & p.down_set(y);
  std::vector<int> elems;
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
    elems.push_back(static_cast<int>(i));
  std::sort(elems.begin(), elems.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
  std::vector<long long> mu(p.size(), 0);
  for (int z : elems) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (int w : elems) {
      if (w == z) break;
      if (p.leq(w, z) && w != z) s += mu[w];
    }
    mu[z] = -s;
  }
  return mu[y];
}

bool is_eulerian(const GradedPoset& p) {
  const int n = p.size();
  Bits even(n), odd(n);
  for (int x = 0; x < n; ++x) (p.rank(x) % 2 == 0 ? even : odd).set(x);
  for (int x = 0; x < n; ++x) {
    const Bits& up = p.up_set(x);
    for (auto z = up.find_first(); z != Bits::npos; z = up.find_next(z)) {
      if (static_cast<int>(z) == x) continue;
      Bits iv = up & p.down_set(static_cast<int>(z));
      if ((iv & even).count() != (iv & odd).count()) return false;
    }
  }
  return true;
}

bool is_boolean_interval(const GradedPoset& p, int x, int z) {
  if (!p.leq(x, z)) return false;
  int len = p.rank(z) - p.rank(x);
  Bits iv = p.up_set(x) & p.down_set(z);
  if (iv.count() != (size_t{1} << len)) return false;
  // atom count: elements covering x inside the interval
  int atoms = 0;
  for (int u : p.upper_covers(x))
    if (p.leq(u, z)) ++atoms;
  return atoms == len;
}

long long flag_number(const GradedPoset& p, std::vector<int> s) {
  const int d = p.length() - 1;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < -1 || i > d) throw Error("BadRankIndex", "index " + std::to_string(i));
  // -1 and d address the bottom/top, which extend every chain uniquely
  std::vector<int> proper;
  for (int i : s)
    if (i > -1 && i < d) proper.push_back(i);
  if (proper.empty()) return 1;
  std::vector<long long> cnt(p.size(), 0);
  for (int y : p.rank_elements(proper[0] + 1)) cnt[y] = 1;
  for (size_t step = 1; step < proper.size(); ++step) {
    std::vector<long long> nxt(p.size(), 0);
    auto prev = p.rank_elements(proper[step - 1] + 1);
    for (int y : p.rank_elements(proper[step] + 1))
      for (int x : prev)
        if (p.leq(x, y)) nxt[y] += cnt[x];
    cnt.swap(nxt);
  }
  long long total = 0;
  for (int y : p.rank_elements(proper.back() + 1)) total += cnt[y];
  return total;
}

FlagVector flag_vector(const GradedPoset& p) {
  FlagVector fv;
  fv.d = p.length() - 1;
  fv.f.resize(fv.d + 2);
  for (int i = -1; i <= fv.d; ++i)
    fv.f[i + 1] = static_cast<long long>(p.rank_mask(i + 1).count());
  for (int i = 0; i < fv.d; ++i)
    for (int j = i + 1; j < fv.d; ++j) {
      long long c = 0;
      for (int y : p.rank_elements(j + 1)) c += (p.down_set(y) & p.rank_mask(i + 1)).count();
      fv.flag[{i, j}] = c;
    }
  return fv;
}

Rat fatness(const FlagVector& fv) {
  if (fv.d != 4) throw Error("WrongDimension", "fatness needs d=4, got d=" + std::to_string(fv.d));
  return Rat(fv.fi(1) + fv.fi(2)) / Rat(fv.fi(0) + fv.fi(3));
}

Rat fatness(const GradedPoset& p) { return fatness(flag_vector(p)); }

SimplicialityProfile simpliciality_profile(const GradedPoset& p) {
  if (!is_eulerian(p)) throw Error("NotEulerian", "profile requires an Eulerian lattice");
  const int d = p.length() - 1;
  SimplicialityProfile prof;
  for (int k = 0; k <= d - 1; ++k) {
    bool all = true;
    for (int z : p.rank_elements(k + 1))
      if (!is_boolean_interval(p, p.bottom(), z)) {
        all = false;
        break;
      }
    if (!all) break;
    prof.max_simplicial = k;
  }
  for (int h = 0; h <= d - 1; ++h) {
    bool all = true;
    for (int x : p.rank_elements(d - h))
      if (!is_boolean_interval(p, x, p.top())) {
        all = false;
        break;
      }
    if (!all) break;
    prof.max_simple = h;
  }
  prof.is_boolean = is_boolean_interval(p, p.bottom(), p.top());
  return prof;
}

namespace {

// Joint color refinement: signature = (color, sorted up-cover colors, sorted
// down-cover colors), renumbered canonically across both posets. Returns
// false when class sizes differ (certificate of non-isomorphism).
bool refine_colors(const GradedPoset& a, const GradedPoset& b, std::vector<int>& ca,
                   std::vector<int>& cb) {
  const int n = a.size();
  int ncolors = -1;
  for (;;) {
    auto signature = [](const GradedPoset& p, const std::vector<int>& col, int x) {
      std::vector<int> s{col[x], -1};
      for (int y : p.upper_covers(x)) s.push_back(col[y]);
      std::sort(s.begin() + 2, s.end());
      size_t mark = s.size();
      s.push_back(-2);
      for (int y : p.lower_covers(x)) s.push_back(col[y]);
      std::sort(s.begin() + mark + 1, s.end());
      return s;
    };
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int x = 0; x < n; ++x) {
      sa[x] = signature(a, ca, x);
      sb[x] = signature(b, cb, x);
      ids.emplace(sa[x], 0);
      ids.emplace(sb[x], 0);
    }
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<long long> count_a(next, 0), count_b(next, 0);
    for (int x = 0; x < n; ++x) {
      ca[x] = ids[sa[x]];
      cb[x] = ids[sb[x]];
      ++count_a[ca[x]];
      ++count_b[cb[x]];
    }
    if (count_a != count_b) return false;
    if (next == ncolors) return true;
    ncolors = next;
  }
}

std::optional<std::vector<int>> search_iso(const GradedPoset& a, const GradedPoset& b,
                                           std::vector<int> ca, std::vector<int> cb) {
  if (!refine_colors(a, b, ca, cb)) return std::nullopt;
  const int n = a.size();
  int splitColor = -1, splitSize = n + 1;
  std::vector<int> classSize(n, 0);
  for (int x = 0; x < n; ++x) ++classSize[ca[x]];
  for (int x = 0; x < n; ++x)
    if (classSize[ca[x]] > 1 && classSize[ca[x]] < splitSize) {
      splitSize = classSize[ca[x]];
      splitColor = ca[x];
    }
  if (splitColor < 0) {
    // discrete coloring: map by matching colors, then verify covers both ways
    std::vector<int> of_color(n, -1), m(n, -1);
    for (int y = 0; y < n; ++y) of_color[cb[y]] = y;
    for (int x = 0; x < n; ++x) m[x] = of_color[ca[x]];
    for (int x = 0; x < n; ++x) {
      if (a.rank(x) != b.rank(m[x])) return std::nullopt;
      std::vector<int> img;
      for (int y : a.upper_covers(x)) img.push_back(m[y]);
      std::sort(img.begin(), img.end());
      std::vector<int> tgt = b.upper_covers(m[x]);
      std::sort(tgt.begin(), tgt.end());
      if (img != tgt) return std::nullopt;
    }
    return m;
  }
  int a0 = -1;
  for (int x = 0; x < n && a0 < 0; ++x)
    if (ca[x] == splitColor) a0 = x;
  for (int y = 0; y < n; ++y) {
    if (cb[y] != splitColor) continue;
    std::vector<int> ca2 = ca, cb2 = cb;
    ca2[a0] = n + 1;
    cb2[y] = n + 1;
    if (auto m = search_iso(a, b, std::move(ca2), std::move(cb2))) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const GradedPoset& a, const GradedPoset& b) {
  if (a.size() != b.size() || a.length() != b.length()) return std::nullopt;
  std::vector<int> ca(a.size()), cb(b.size());
  for (int x = 0; x < a.size(); ++x) ca[x] = a.rank(x);
  for (int x = 0; x < b.size(); ++x) cb[x] = b.rank(x);
  return search_iso(a, b, std::move(ca), std::move(cb));
}

FaceLattice face_lattice_from_incidence(int nvertices,
                                        const std::vector<Bits>& facet_vertices) {
  if (nvertices <= 0) throw Error("NotGraded", "no vertices");
  if (facet_vertices.empty()) throw Error("NotGraded", "no facets");
  Bits all(nvertices);
  all.set();
  Bits covered(nvertices);
  for (const auto& f : facet_vertices) {
    if (f.size() != static_cast<size_t>(nvertices))
      throw Error("NotGraded", "facet bitset of wrong width");
    if (f == all) throw Error("NotGraded", "facet containing every vertex");
    covered |= f;
  }
  if (covered != all) throw Error("NotGraded", "vertex on no facet");
  std::set<Bits> base(facet_vertices.begin(), facet_vertices.end());
  if (base.size() != facet_vertices.size()) throw Error("NotGraded", "repeated facet");

  // Close the facet sets under intersection; top = empty intersection.
  std::map<Bits, int> index;
  std::vector<Bits> sets;
  auto add = [&](const Bits& s) -> bool {
    if (index.count(s)) return false;
    index.emplace(s, static_cast<int>(sets.size()));
    sets.push_back(s);
    return true;
  };
  add(all);
  std::queue<Bits> work;
  for (const auto& f : facet_vertices)
    if (add(f)) work.push(f);
  while (!work.empty()) {
    Bits s = work.front();
    work.pop();
    for (const auto& f : facet_vertices) {
      Bits i = s & f;
      if (add(i)) work.push(i);
    }
  }
  add(Bits(nvertices));

  const int n = static_cast<int>(sets.size());
  // strict inclusion closure on element ids
  std::vector<Bits> below(n, Bits(n));  // below[e] = ids of sets strictly contained in e
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sets[j].is_subset_of(sets[i]) && sets[j] != sets[i]) below[i].set(j);
  std::vector<Bits> above(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (auto j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j))
      above[j].set(i);

  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (auto j = below[i].find_first(); j != Bits::npos; j = below[i].find_next(j)) {
      if ((below[i] & above[j]).any()) continue;
      covers.emplace_back(static_cast<int>(j), i);
    }

  // rank = longest chain from the bottom; from_covers re-validates gradedness
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return below[x].count() < below[y].count(); });
  std::vector<int> ranks(n, 0);
  std::vector<std::vector<int>> lower(n);
  for (auto [x, y] : covers) lower[y].push_back(x);
  for (int e : order)
    for (int l : lower[e]) ranks[e] = std::max(ranks[e], ranks[l] + 1);

  FaceLattice fl;
  try {
    fl.poset = GradedPoset::from_covers(ranks, covers);
  } catch (const Error& e) {
    throw Error("NotGraded", std::string("incidence closure not graded: ") + e.what());
  }
  fl.vertex_sets = std::move(sets);
  fl.index = std::move(index);
  return fl;
}

GradedPoset boolean_lattice(int n) {
  if (n < 0 || n > 20) throw Error("BadParams", "boolean lattice order out of range");
  std::vector<int> ranks(size_t{1} << n);
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < (1 << n); ++s) {
    ranks[s] = __builtin_popcount(static_cast<unsigned>(s));
    for (int i = 0; i < n; ++i)
      if (!(s & (1 << i))) covers.emplace_back(s, s | (1 << i));
  }
  return GradedPoset::from_covers(std::move(ranks), covers);
}

}  // namespace etlib
