#include "etlib/constructions.hpp"

#include <algorithm>
#include <utility>

namespace etlib {

namespace {

// Hyperplane through all of pts, unique up to scale modulo the hull
// equations; nullopt when the points do not pin one down.
std::optional<Hyperplane> plane_through(const std::vector<RatVec>& pts,
                                        const std::vector<Hyperplane>& hull) {
  if (pts.empty()) return std::nullopt;
  RatMat rows;
  for (const auto& p : pts) {
    RatVec r = p;
    r.push_back(-1);
    rows.push_back(std::move(r));
  }
  auto ker = kernel(rows);  // vectors (a, b) with <a,p> = b for every p
  if (ker.size() != hull.size() + 1) return std::nullopt;
  RatMat hrows;
  for (const auto& h : hull) {
    RatVec r = h.a;
    r.push_back(h.b);
    hrows.push_back(std::move(r));
  }
  int base = rank(hrows);
  for (const auto& kv : ker) {
    RatMat m = hrows;
    m.push_back(kv);
    if (rank(m) > base) {
      RatVec a(kv.begin(), kv.end() - 1);
      return Hyperplane{a, kv.back()};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> edge_list(const VHPolytope& p) {
  std::vector<std::pair<int, int>> edges;
  for (int e : p.faces->poset.rank_elements(2)) {
    const Bits& vs = p.faces->vertex_sets[e];
    int a = static_cast<int>(vs.find_first());
    int b = static_cast<int>(vs.find_next(a));
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Intersection of h with segment (v, w); requires v beyond and w beneath.
RatVec cut_edge_point(const Hyperplane& h, const RatVec& v, const RatVec& w) {
  Rat hv = dot(h.a, v) - h.b;
  Rat hw = dot(h.a, w) - h.b;
  if (!(hv > 0 && hw < 0))
    throw Error("CutInvariantViolated", "cut does not separate the edge");
  Rat s = hv / (hv - hw);
  return vadd(v, vscale(s, vsub(w, v)));
}

const VHPolytope& certified(const VHPolytope& p, VHPolytope& storage) {
  if (p.certified) return p;
  storage = validate(p);
  return storage;
}

std::vector<long long> proper_f(const GradedPoset& p) {
  auto fv = flag_vector(p);
  return std::vector<long long>(fv.f.begin() + 1, fv.f.end() - 1);
}

// One cut per vertex through the given per-edge points.
CutSystem cuts_through_edge_points(
    const VHPolytope& p, const std::map<std::pair<int, int>, RatVec>& pts,
    const char* what) {
  int nv = static_cast<int>(p.vertices.size());
  std::vector<std::vector<RatVec>> at(nv);
  for (const auto& [e, x] : pts) {
    at[e.first].push_back(x);
    at[e.second].push_back(x);
  }
  std::vector<Hyperplane> cuts;
  for (int v = 0; v < nv; ++v) {
    auto h = plane_through(at[v], p.hull);
    if (!h)
      throw Error("CutSearchFailed", std::string(what) + " at vertex " +
                                         std::to_string(v) + " are not coplanar");
    Rat hv = dot(h->a, p.vertices[v]) - h->b;
    if (hv == 0)
      throw Error("CutSearchFailed",
                  "cut at vertex " + std::to_string(v) + " passes through it");
    if (hv < 0) {
      for (auto& c : h->a) c = -c;
      h->b = -h->b;
    }
    cuts.push_back(std::move(*h));
  }
  return certify_cut_system(p, std::move(cuts));
}

}  // namespace

CutSystem certify_cut_system(const VHPolytope& p0, std::vector<Hyperplane> cuts) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  int nv = static_cast<int>(p.vertices.size());
  if (static_cast<int>(cuts.size()) != nv)
    throw Error("CutInvariantViolated", "expected one cut per vertex");
  for (int v = 0; v < nv; ++v) {
    for (int u = 0; u < nv; ++u) {
      Side s = side(cuts[v], p.vertices[u]);
      if (u == v && s != Side::Beyond)
        throw Error("CutInvariantViolated",
                    "vertex " + std::to_string(v) + " is not beyond its own cut");
      if (u != v && s != Side::Beneath)
        throw Error("CutInvariantViolated",
                    "vertex " + std::to_string(u) + " is not beneath the cut at " +
                        std::to_string(v));
    }
  }
  CutSystem cs;
  cs.cuts = std::move(cuts);
  for (auto [a, b] : edge_list(p)) {
    RatVec xa = cut_edge_point(cs.cuts[a], p.vertices[a], p.vertices[b]);
    RatVec xb = cut_edge_point(cs.cuts[b], p.vertices[b], p.vertices[a]);
    if (xa != xb)
      throw Error("CutInvariantViolated",
                  "cuts meet edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") in two distinct points");
    cs.edge_points.emplace(std::make_pair(a, b), std::move(xa));
  }
  return cs;
}

CutSystem midpoint_cuts(const VHPolytope& p0) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  std::map<std::pair<int, int>, RatVec> mids;
  for (auto [a, b] : edge_list(p))
    mids.emplace(std::make_pair(a, b),
                 vscale(Rat(1, 2), vadd(p.vertices[a], p.vertices[b])));
  return cuts_through_edge_points(p, mids, "edge midpoints");
}

CutSystem tangency_cuts(const VHPolytope& p0, const Rat& r2) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  auto rep = is_t_tangent(p, 1, r2);
  if (!rep.tangent) throw Error("NotTangent", rep.detail);
  std::map<std::pair<int, int>, RatVec> pts;
  for (const auto& [e, x] : rep.points) {
    const Bits& vs = p.faces->vertex_sets[e];
    int a = static_cast<int>(vs.find_first());
    int b = static_cast<int>(vs.find_next(a));
    pts.emplace(std::make_pair(a, b), x);
  }
  return cuts_through_edge_points(p, pts, "edge tangency points");
}

CutSystem parametric_cuts(const VHPolytope& p0, const Rat& s) {
  if (s <= 0 || s >= 1) throw Error("BadParams", "cut parameter must lie in (0,1)");
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  auto edges = edge_list(p);
  int nv = static_cast<int>(p.vertices.size());

  // 2-color the edge graph; an odd cycle leaves only the color-blind s = 1/2
  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(nv, -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : adj[v]) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v] && s != Rat(1, 2)) {
        throw Error("CutSearchFailed",
                    "edge graph has an odd cycle; only the midpoint parameter is consistent");
      }
    }
  }

  std::map<std::pair<int, int>, RatVec> pts;
  for (auto [a, b] : edges) {
    Rat sa = color[a] == 0 ? s : 1 - s;
    pts.emplace(std::make_pair(a, b),
                vadd(p.vertices[a], vscale(sa, vsub(p.vertices[b], p.vertices[a]))));
  }
  return cuts_through_edge_points(p, pts, "parametric edge points");
}

CutSystem inductive_cuts(const VHPolytope& p0) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  for (const Rat& s : {Rat(1, 3), Rat(1, 4), Rat(1, 5), Rat(1, 2)}) {
    try {
      return parametric_cuts(p, s);
    } catch (const Error&) {
    }
  }
  throw Error("CutSearchFailed", "no parameter in the schedule yields a certified cut system");
}

VHPolytope stack(const VHPolytope& p0, int facet, std::optional<RatVec> apex) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  int nf = static_cast<int>(p.facets.size());
  if (facet < 0 || facet >= nf)
    throw Error("BadParams", "facet index out of range");

  std::vector<RatVec> fpts;
  for (auto i = p.facet_vertices[facet].find_first(); i != Bits::npos;
       i = p.facet_vertices[facet].find_next(i))
    fpts.push_back(p.vertices[i]);

  if (!apex) {
    RatVec c0 = centroid(fpts);
    Rat step = 1;
    for (int it = 0; it < 64 && !apex; ++it, step /= 2) {
      RatVec cand = vadd(c0, vscale(step, p.facets[facet].a));
      bool ok = true;
      for (int g = 0; g < nf && ok; ++g)
        if (g != facet && side(p.facets[g], cand) != Side::Beneath) ok = false;
      if (ok) apex = std::move(cand);
    }
    if (!apex)
      throw Error("PlacementFailed",
                  "no point beyond facet " + std::to_string(facet) +
                      " stays beneath the other facets");
  } else {
    check_dim(*apex, p.ambient, "apex");
  }

  if (side(p.facets[facet], *apex) != Side::Beyond)
    throw Error("ApexNotBeyond",
                "apex is not strictly beyond facet " + std::to_string(facet));
  for (int g = 0; g < nf; ++g) {
    if (g != facet && side(p.facets[g], *apex) != Side::Beneath)
      throw Error("ApexNotBeneathOthers",
                  "apex is not strictly beneath facet " + std::to_string(g));
  }

  VHPolytope q;
  q.ambient = p.ambient;
  q.hull = p.hull;
  q.center = p.center;
  q.vertices = p.vertices;
  q.vertices.push_back(*apex);
  q.facets = p.facets;
  q.facets.erase(q.facets.begin() + facet);

  int fe = p.faces->index.at(p.facet_vertices[facet]);
  for (int r : p.faces->poset.lower_covers(fe)) {
    std::vector<RatVec> pts;
    const Bits& vs = p.faces->vertex_sets[r];
    for (auto i = vs.find_first(); i != Bits::npos; i = vs.find_next(i))
      pts.push_back(p.vertices[i]);
    pts.push_back(*apex);
    auto h = plane_through(pts, p.hull);
    if (!h) throw Error("PlacementFailed", "ridge and apex do not span a hyperplane");
    for (const auto& v : p.vertices) {
      Rat hv = dot(h->a, v) - h->b;
      if (hv == 0) continue;
      if (hv > 0) {
        for (auto& c : h->a) c = -c;
        h->b = -h->b;
      }
      break;
    }
    q.facets.push_back(std::move(*h));
  }
  return validate(std::move(q));
}

VHPolytope truncate_all(const VHPolytope& p0, const CutSystem& cs0) {
  VHPolytope storage;
  const VHPolytope& p = certified(p0, storage);
  CutSystem cs = certify_cut_system(p, cs0.cuts);
  VHPolytope q;
  q.ambient = p.ambient;
  q.hull = p.hull;
  q.center = p.center;
  for (const auto& [e, x] : cs.edge_points) q.vertices.push_back(x);
  q.facets = p.facets;
  q.facets.insert(q.facets.end(), cs.cuts.begin(), cs.cuts.end());
  return validate(std::move(q));
}

StackedFamily build_truncatable_stacked(int d, const std::vector<int>& plan,
                                        const std::string& base) {
  if (d < 3) throw Error("BadParams", "stacked family needs d >= 3");
  if (base != "simplex" && base != "cross")
    throw Error("BadParams", "base must be simplex or cross");
  VHPolytope p = generate(base, d);
  CutSystem cs = midpoint_cuts(p);

  for (int f : plan) {
    if (f < 0 || f >= static_cast<int>(p.facets.size()))
      throw Error("BadParams", "plan facet index out of range");
    // Base point: centroid of this facet's edge points, which lies strictly
    // inside every cut, so a small step outward keeps all certificates.
    std::vector<RatVec> epts;
    for (const auto& [e, x] : cs.edge_points)
      if (p.facet_vertices[f].test(e.first) && p.facet_vertices[f].test(e.second))
        epts.push_back(x);
    RatVec x0 = centroid(epts);

    bool placed = false;
    std::string why = "no candidate tried";
    Rat step = 1;
    for (int it = 0; it < 64 && !placed; ++it, step /= 2) {
      RatVec apex = vadd(x0, vscale(step, p.facets[f].a));
      try {
        std::vector<RatVec> crossings;
        for (auto w = p.facet_vertices[f].find_first(); w != Bits::npos;
             w = p.facet_vertices[f].find_next(w)) {
          crossings.push_back(
              cut_edge_point(cs.cuts[w], p.vertices[w], apex));
        }
        auto hc = plane_through(crossings, p.hull);
        if (!hc) throw Error("PlacementFailed", "cut points do not span a hyperplane");
        Rat ha = dot(hc->a, apex) - hc->b;
        if (ha == 0) throw Error("PlacementFailed", "apex on its own cut");
        if (ha < 0) {
          for (auto& c : hc->a) c = -c;
          hc->b = -hc->b;
        }
        VHPolytope q = stack(p, f, apex);
        std::vector<Hyperplane> cuts2 = cs.cuts;
        cuts2.push_back(std::move(*hc));
        CutSystem cs2 = certify_cut_system(q, std::move(cuts2));
        p = std::move(q);
        cs = std::move(cs2);
        placed = true;
      } catch (const Error& e) {
        why = e.what();
      }
    }
    if (!placed) throw Error("PlacementFailed", why);
  }

  StackedFamily fam;
  fam.base = base;
  fam.plan = plan;
  fam.polytope = std::move(p);
  fam.cuts = std::move(cs);
  fam.cuts_certified = true;
  fam.note = "midpoint seed, cuts threaded through edge crossings";
  return fam;
}

namespace {

// Tower layers: layer k holds the tetrahedron tau*s*w_m + (sigma/4)*ones,
// m = 0..3, with w_m = e_m - ones/4; consecutive layers anti-align (tau
// flips), so each pair spans a combinatorial cross polytope.
struct Layer {
  int tau;
  Rat s, sigma;
};

RatVec wvec(int m) {
  RatVec w(4, Rat(-1, 4));
  w[m] += 1;
  return w;
}

RatVec layer_vertex(const Layer& l, int m) {
  RatVec v(4, l.tau * l.s * Rat(-1, 4) + l.sigma / 4);
  v[m] += l.tau * l.s;
  return v;
}

VHPolytope assemble_tower(const std::vector<Layer>& layers) {
  VHPolytope p;
  p.ambient = 4;
  for (const auto& l : layers)
    for (int m = 0; m < 4; ++m) p.vertices.push_back(layer_vertex(l, m));
  RatVec c = centroid(p.vertices);

  auto oriented = [&](std::vector<RatVec> pts) {
    auto h = plane_through(pts, {});
    if (!h) throw Error("PlacementFailed", "tower facet points not coplanar");
    Rat hc = dot(h->a, c) - h->b;
    if (hc == 0) throw Error("PlacementFailed", "tower facet through the centroid");
    if (hc > 0) {
      for (auto& x : h->a) x = -x;
      h->b = -h->b;
    }
    return *h;
  };

  std::vector<RatVec> bottom, top;
  for (int m = 0; m < 4; ++m) {
    bottom.push_back(layer_vertex(layers.front(), m));
    top.push_back(layer_vertex(layers.back(), m));
  }
  p.facets.push_back(oriented(bottom));
  for (size_t k = 0; k + 1 < layers.size(); ++k) {
    for (int mask = 1; mask < 15; ++mask) {
      std::vector<RatVec> pts;
      for (int m = 0; m < 4; ++m)
        pts.push_back(layer_vertex(((mask >> m) & 1) ? layers[k + 1] : layers[k], m));
      p.facets.push_back(oriented(std::move(pts)));
    }
  }
  p.facets.push_back(oriented(top));
  p.center = c;
  return validate(std::move(p));
}

void check_tower_f(const VHPolytope& p, int n) {
  std::vector<long long> want = {4 + 4LL * n, 6 + 18LL * n, 4 + 28LL * n,
                                 2 + 14LL * n};
  if (proper_f(p.faces->poset) != want ||
      flag_number(p.faces->poset, {0, 3}) != 8 + 56LL * n)
    throw Error("PlacementFailed", "tower has the wrong flag vector");
}

// One-parameter symmetric cut family: the cut at vertex (k, m) has normal
// tau_k*w_m + c_k*ones and offset b_k; intra-layer edges are met at their
// midpoints and cross-layer edges at a per-level fraction t_k.  Fixing
// c_0 = lambda determines everything else by chain solving.
std::vector<Hyperplane> ansatz_cuts(const std::vector<Layer>& layers,
                                    const Rat& lambda) {
  int nl = static_cast<int>(layers.size());
  std::vector<Rat> cc(nl), bb(nl);
  auto normal = [&](int k, int m) {
    RatVec a = vscale(layers[k].tau, wvec(m));
    for (auto& x : a) x += cc[k];
    return a;
  };
  auto vsum = [](const RatVec& v) {
    Rat s = 0;
    for (const auto& x : v) s += x;
    return s;
  };

  cc[0] = lambda;
  {
    RatVec mid = vscale(Rat(1, 2), vadd(layer_vertex(layers[0], 0),
                                        layer_vertex(layers[0], 1)));
    bb[0] = dot(normal(0, 0), mid);
  }
  for (int k = 1; k < nl; ++k) {
    RatVec lo = layer_vertex(layers[k - 1], 0);
    RatVec up = layer_vertex(layers[k], 1);
    RatVec nlo = normal(k - 1, 0);
    Rat hlo = dot(nlo, lo) - bb[k - 1];
    Rat hup = dot(nlo, up) - bb[k - 1];
    if (hlo == hup) throw Error("CutSearchFailed", "degenerate chain step");
    Rat t = hlo / (hlo - hup);
    if (!(t > 0 && t < 1))
      throw Error("CutSearchFailed", "chain point leaves the edge");
    RatVec pt = vadd(lo, vscale(t, vsub(up, lo)));

    RatVec mid = vscale(Rat(1, 2), vadd(layer_vertex(layers[k], 0),
                                        layer_vertex(layers[k], 1)));
    // unknown (c, b): tau*<w_1,pt> + c*sum(pt) = b and tau*<w_0,mid> + c*sum(mid) = b
    Rat a1 = layers[k].tau * dot(wvec(1), pt), s1 = vsum(pt);
    Rat a2 = layers[k].tau * dot(wvec(0), mid), s2 = vsum(mid);
    if (s1 == s2) throw Error("CutSearchFailed", "chain heights coincide");
    cc[k] = (a2 - a1) / (s1 - s2);
    bb[k] = a1 + cc[k] * s1;
  }

  std::vector<Hyperplane> cuts;
  for (int k = 0; k < nl; ++k) {
    Rat hv = dot(normal(k, 0), layer_vertex(layers[k], 0)) - bb[k];
    if (hv == 0) throw Error("CutSearchFailed", "cut through its vertex");
    int flip = hv < 0 ? -1 : 1;
    for (int m = 0; m < 4; ++m)
      cuts.push_back({vscale(flip, normal(k, m)), flip * bb[k]});
  }
  return cuts;
}

}  // namespace

StackedFamily build_cross_stack(int n, bool require_cuts) {
  if (n < 1) throw Error("BadParams", "cross stack needs n >= 1");

  std::vector<Layer> layers = {{-1, 1, -1}, {1, 1, 1}};
  VHPolytope p = assemble_tower(layers);
  check_tower_f(p, 1);
  for (int k = 2; k <= n; ++k) {
    const Layer prev = layers.back();
    bool ok = false;
    std::string why = "no candidate tried";
    for (int udiv = 4; udiv <= 32 && !ok; udiv *= 2) {
      for (int bexp = 3; bexp <= 12 && !ok; ++bexp) {
        Layer cand{-prev.tau, prev.s / udiv,
                   prev.sigma + Rat(1, 1LL << bexp)};
        try {
          auto layers2 = layers;
          layers2.push_back(cand);
          VHPolytope q = assemble_tower(layers2);
          check_tower_f(q, k);
          layers = std::move(layers2);
          p = std::move(q);
          ok = true;
        } catch (const Error& e) {
          why = e.what();
        }
      }
    }
    if (!ok)
      throw Error("PlacementFailed",
                  "cross stack layer " + std::to_string(k) + ": " + why);
  }

  StackedFamily fam;
  fam.base = "cross_stack";
  fam.polytope = std::move(p);
  try {
    fam.cuts = midpoint_cuts(fam.polytope);
    fam.cuts_certified = true;
    fam.note = "midpoint cuts";
    return fam;
  } catch (const Error&) {
  }
  std::vector<Rat> sweep = {0};
  for (const Rat& mag :
       {Rat(1, 8), Rat(1, 4), Rat(3, 8), Rat(1, 2), Rat(5, 8), Rat(3, 4),
        Rat(1), Rat(3, 2), Rat(2), Rat(3), Rat(4), Rat(6), Rat(8)}) {
    sweep.push_back(mag);
    sweep.push_back(-mag);
  }
  for (const Rat& lambda : sweep) {
    try {
      auto cuts = ansatz_cuts(layers, lambda);
      fam.cuts = certify_cut_system(fam.polytope, std::move(cuts));
      fam.cuts_certified = true;
      fam.note = "orbit ansatz, lambda = " + format_rat(lambda);
      return fam;
    } catch (const Error&) {
    }
  }
  if (require_cuts)
    throw Error("CutSearchFailed",
                "no certified cut system for the cross stack at n = " +
                    std::to_string(n));
  fam.note = "no certified cut system";
  return fam;
}

VHPolytope generate(const std::string& kind, int d, int k) {
  VHPolytope p;
  if (kind == "simplex") {
    if (d < 3) throw Error("BadParams", "simplex needs d >= 3");
    p.ambient = d + 1;
    p.hull.push_back({RatVec(d + 1, 1), 1});
    for (int i = 0; i <= d; ++i) {
      RatVec v(d + 1, 0);
      v[i] = 1;
      p.vertices.push_back(v);
      RatVec a(d + 1, 0);
      a[i] = -1;
      p.facets.push_back({a, 0});
    }
    p.center.assign(d + 1, Rat(1, d + 1));
  } else if (kind == "cube") {
    if (d < 3) throw Error("BadParams", "cube needs d >= 3");
    p.ambient = d;
    for (long long m = 0; m < (1LL << d); ++m) {
      RatVec v(d);
      for (int i = 0; i < d; ++i) v[i] = ((m >> i) & 1) ? 1 : -1;
      p.vertices.push_back(v);
    }
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < d; ++i) {
        RatVec a(d, 0);
        a[i] = s ? -1 : 1;
        p.facets.push_back({a, 1});
      }
    p.center.assign(d, 0);
  } else if (kind == "cross") {
    if (d < 3) throw Error("BadParams", "cross polytope needs d >= 3");
    p.ambient = d;
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < d; ++i) {
        RatVec v(d, 0);
        v[i] = s ? -1 : 1;
        p.vertices.push_back(v);
      }
    for (long long eps = 0; eps < (1LL << d); ++eps) {
      RatVec a(d);
      for (int i = 0; i < d; ++i) a[i] = ((eps >> i) & 1) ? 1 : -1;
      p.facets.push_back({a, 1});
    }
    p.center.assign(d, 0);
  } else if (kind == "hypersimplex") {
    if (d < 3 || k < 1 || k > d)
      throw Error("BadParams", "hypersimplex needs d >= 3 and 1 <= k <= d");
    p.ambient = d + 1;
    p.hull.push_back({RatVec(d + 1, 1), Rat(k)});
    for (long long m = 0; m < (1LL << (d + 1)); ++m) {
      if (__builtin_popcountll(m) != k) continue;
      RatVec v(d + 1);
      for (int i = 0; i <= d; ++i) v[i] = (m >> i) & 1;
      p.vertices.push_back(v);
    }
    for (int i = 0; i <= d && k <= d - 1; ++i) {
      RatVec a(d + 1, 0);
      a[i] = -1;
      p.facets.push_back({a, 0});
    }
    for (int i = 0; i <= d && k >= 2; ++i) {
      RatVec a(d + 1, 0);
      a[i] = 1;
      p.facets.push_back({a, 1});
    }
    p.center.assign(d + 1, Rat(k, d + 1));
  } else if (kind == "M") {
    if (d < 4) throw Error("BadParams", "M needs d >= 4");
    p.ambient = d;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (long long m = 0; m < (1LL << (d - 2)); ++m) {
          RatVec v(d);
          int bit = 0;
          for (int c = 0; c < d; ++c) {
            if (c == i || c == j) continue;
            v[c] = ((m >> bit) & 1) ? 1 : -1;
            ++bit;
          }
          p.vertices.push_back(v);
        }
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < d; ++i) {
        RatVec a(d, 0);
        a[i] = s ? -1 : 1;
        p.facets.push_back({a, 1});
      }
    for (long long eps = 0; eps < (1LL << d); ++eps) {
      RatVec a(d);
      for (int i = 0; i < d; ++i) a[i] = ((eps >> i) & 1) ? 1 : -1;
      p.facets.push_back({a, d - 2});
    }
    p.center.assign(d, 0);
  } else if (kind == "halfcube_N") {
    if (d < 4) throw Error("BadParams", "halfcube needs d >= 4");
    p.ambient = d;
    for (long long m = 0; m < (1LL << d); ++m) {
      if (__builtin_popcountll(m) % 2) continue;  // even number of -1 entries
      RatVec v(d);
      for (int i = 0; i < d; ++i) v[i] = ((m >> i) & 1) ? -1 : 1;
      p.vertices.push_back(v);
    }
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < d; ++i) {
        RatVec a(d, 0);
        a[i] = s ? -1 : 1;
        p.facets.push_back({a, 1});
      }
    for (long long m = 0; m < (1LL << d); ++m) {
      if (__builtin_popcountll(m) % 2 == 0) continue;  // odd sign vectors
      RatVec a(d);
      for (int i = 0; i < d; ++i) a[i] = ((m >> i) & 1) ? -1 : 1;
      p.facets.push_back({a, d - 2});
    }
    p.center.assign(d, 0);
  } else if (kind == "prism_over_simplex") {
    if (d < 3) throw Error("BadParams", "prism needs d >= 3");
    p.ambient = d + 1;
    RatVec h(d + 1, 1);
    h[d] = 0;
    p.hull.push_back({h, 1});
    for (int lvl = 0; lvl < 2; ++lvl)
      for (int i = 0; i < d; ++i) {
        RatVec v(d + 1, 0);
        v[i] = 1;
        v[d] = lvl;
        p.vertices.push_back(v);
      }
    for (int i = 0; i < d; ++i) {
      RatVec a(d + 1, 0);
      a[i] = -1;
      p.facets.push_back({a, 0});
    }
    RatVec bot(d + 1, 0), top(d + 1, 0);
    bot[d] = -1;
    top[d] = 1;
    p.facets.push_back({bot, 0});
    p.facets.push_back({top, 1});
    p.center.assign(d + 1, Rat(1, d));
    p.center[d] = Rat(1, 2);
  } else {
    throw Error("BadParams", "unknown generator kind '" + kind + "'");
  }
  return validate(std::move(p));
}

}  // namespace etlib
