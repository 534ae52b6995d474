#include "etlib/subdivision.hpp"

#include <algorithm>

namespace etlib {

namespace {

// Ids in range, proper support, weights nonnegative and summing to one.
void check_shape(const GradedPoset& p, const ChainPoint& c, const char* what) {
  if (c.chain.size() != c.weights.size())
    throw Error("BadParams",
                std::string(what) + ": chain and weights differ in length");
  Rat total = 0;
  for (size_t i = 0; i < c.chain.size(); ++i) {
    int x = c.chain[i];
    if (x < 0 || x >= p.size())
      throw Error("BadParams", std::string(what) + ": element id out of range");
    if (x == p.bottom() || x == p.top())
      throw Error("NotAChain",
                  std::string(what) + ": support must avoid bottom and top");
    if (c.weights[i] < 0)
      throw Error("BadParams", std::string(what) + ": negative weight");
    total += c.weights[i];
  }
  if (total != 1)
    throw Error("BadParams", std::string(what) + ": weights do not sum to 1");
}

void check_chain(const GradedPoset& p, const ChainPoint& c, const char* what) {
  for (size_t i = 0; i < c.chain.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      if (c.chain[j] == c.chain[i])
        throw Error("NotAChain", std::string(what) + ": repeated element");
      if (!p.leq(c.chain[j], c.chain[i]) && !p.leq(c.chain[i], c.chain[j]))
        throw Error("NotAChain",
                    std::string(what) + ": incomparable support elements");
    }
}

ChainPoint collect(const GradedPoset& p, const std::map<int, Rat>& acc) {
  ChainPoint out;
  for (const auto& [x, w] : acc)
    if (w != 0) {
      out.chain.push_back(x);
      out.weights.push_back(w);
    }
  std::vector<size_t> order(out.chain.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int ra = p.rank(out.chain[a]), rb = p.rank(out.chain[b]);
    return ra != rb ? ra < rb : out.chain[a] < out.chain[b];
  });
  ChainPoint sorted;
  for (size_t i : order) {
    sorted.chain.push_back(out.chain[i]);
    sorted.weights.push_back(out.weights[i]);
  }
  return sorted;
}

}  // namespace

ChainPoint pruned(const GradedPoset& p, const ChainPoint& c) {
  std::map<int, Rat> acc;
  for (size_t i = 0; i < c.chain.size(); ++i)
    if (c.weights[i] != 0) acc[c.chain[i]] += c.weights[i];
  return collect(p, acc);
}

bool same_point(const GradedPoset& p, const ChainPoint& a, const ChainPoint& b) {
  ChainPoint pa = pruned(p, a), pb = pruned(p, b);
  return pa.chain == pb.chain && pa.weights == pb.weights;
}

ChainPoint pi(const GradedPoset& l, const EtResult& e, const ChainPoint& c) {
  check_shape(e.poset, c, "pi input");
  check_chain(e.poset, c, "pi input");
  std::map<int, Rat> acc;
  for (size_t i = 0; i < c.chain.size(); ++i) {
    const EtElement& el = e.elems[c.chain[i]];
    const Rat& w = c.weights[i];
    if (el.kind == EtElement::Kind::Singleton) {
      acc[el.x] += w;
    } else {
      // check_point rejected the top and bottom of e.poset, so this is an
      // interval with at least one proper endpoint
      bool xb = el.x == l.bottom(), zt = el.z == l.top();
      if (xb)
        acc[el.z] += w;
      else if (zt)
        acc[el.x] += w;
      else {
        acc[el.x] += w / 2;
        acc[el.z] += w / 2;
      }
    }
  }
  return collect(l, acc);
}

ChainPoint pi_inverse(const GradedPoset& l, const EtResult& e,
                      const ChainPoint& q) {
  check_shape(l, q, "pi_inverse input");
  std::map<int, std::pair<int, Rat>> at;  // poset rank -> (element, weight)
  for (size_t i = 0; i < q.chain.size(); ++i) {
    int r = l.rank(q.chain[i]);
    if (!at.emplace(r, std::make_pair(q.chain[i], q.weights[i])).second)
      throw Error("RankCollision",
                  "two support elements share rank " + std::to_string(r));
  }
  check_chain(l, q, "pi_inverse input");
  int d = l.length() - 1;
  // middle index, read off any singleton of e
  int t = l.rank(e.singleton_id.begin()->first) - 1;

  // x side: (rank, element, weight, f(rank)) with f = partial sums downward
  // from rank t; rank 0 is the bottom with conventional weight 1
  struct Entry {
    int rank, elem;
    Rat lam, cum;  // cum = f(rank) or g(rank) inclusive
  };
  std::vector<Entry> xs, zs;
  {
    Rat run = 0;
    for (auto it = at.rbegin(); it != at.rend(); ++it) {
      if (it->first > t) continue;
      run += it->second.second;
      xs.push_back({it->first, it->second.first, it->second.second, run});
    }
    run += 1;
    xs.push_back({0, l.bottom(), Rat(1), run});
  }
  {
    Rat run = 0;
    for (auto& [r, ew] : at) {
      if (r < t + 2) continue;
      run += ew.second;
      zs.push_back({r, ew.first, ew.second, run});
    }
    run += 1;
    zs.push_back({d + 1, l.top(), Rat(1), run});
  }

  std::map<int, Rat> acc;
  Rat total = 0;
  auto yit = at.find(t + 1);
  if (yit != at.end() && yit->second.second != 0) {
    int sid = e.singleton(yit->second.first);
    if (sid < 0)
      throw Error("NoMiddleRankPath", "middle-rank element is not a vertex of "
                                      "the interval poset");
    acc[sid] += yit->second.second;
    total += yit->second.second;
  }
  for (const auto& x : xs) {
    for (const auto& z : zs) {
      if (x.rank == 0 && z.rank == d + 1) continue;
      Rat lo = std::max(x.cum - x.lam, z.cum - z.lam);
      Rat hi = std::min(x.cum, z.cum);
      if (hi <= lo) continue;
      Rat alpha = hi - lo;
      Rat w = (x.rank >= 1 && z.rank <= d) ? 2 * alpha : alpha;
      int eid = e.interval(x.elem, z.elem);
      if (eid < 0)
        throw Error("NoMiddleRankPath",
                    "interval [" + std::to_string(x.elem) + "," +
                        std::to_string(z.elem) + "] is not in the interval poset");
      acc[eid] += w;
      total += w;
    }
  }
  if (total != 1)
    throw Error("NoMiddleRankPath",
                "weights cannot be carried across the middle rank");
  return collect(e.poset, acc);
}

}  // namespace etlib
