#include "etlib/et.hpp"

namespace etlib {

namespace {

void check_t(const GradedPoset& l, int t) {
  int d = l.length() - 1;
  if (t < 0 || t > d - 1)
    throw Error("BadT", "t=" + std::to_string(t) + " outside 0.." + std::to_string(d - 1));
}

}  // namespace

EtResult et(const GradedPoset& l, int t) {
  check_t(l, t);
  const int len = l.length();  // = d+1
  const int mid = t + 1;       // poset rank of the middle level

  EtResult r;
  std::vector<int> ranks;
  auto push = [&](EtElement e, int rank) {
    r.elems.push_back(e);
    ranks.push_back(rank);
    return static_cast<int>(r.elems.size()) - 1;
  };

  const Bits& middle = l.rank_mask(mid);
  for (int x = 0; x < l.size(); ++x) {
    if (l.rank(x) > t) continue;
    const Bits& up = l.up_set(x);
    for (auto zi = up.find_first(); zi != Bits::npos; zi = up.find_next(zi)) {
      int z = static_cast<int>(zi);
      if (l.rank(z) < mid + 1) continue;
      // a middle element strictly between x and z must exist (it always does
      // in a graded interval; kept as a guard on the input)
      if (!(up & l.down_set(z) & middle).any()) continue;
      int id = push({EtElement::Kind::Interval, x, z}, l.rank(x) + len - l.rank(z));
      r.interval_id[{x, z}] = id;
    }
  }
  for (auto yi = middle.find_first(); yi != Bits::npos; yi = middle.find_next(yi)) {
    int y = static_cast<int>(yi);
    int id = push({EtElement::Kind::Singleton, y, y}, len - 1);
    r.singleton_id[y] = id;
  }
  r.empty_id = push({EtElement::Kind::TopEmpty, -1, -1}, len);

  const int n = static_cast<int>(r.elems.size());
  // reversed inclusion, singletons read as degenerate intervals [y,y]
  auto leq_et = [&](int a, int b) {
    if (b == r.empty_id) return true;
    if (a == r.empty_id) return false;
    const EtElement& ea = r.elems[a];
    const EtElement& eb = r.elems[b];
    return l.leq(ea.x, eb.x) && l.leq(eb.z, ea.z);
  };

  std::vector<std::vector<int>> by_rank(len + 1);
  for (int i = 0; i < n; ++i) by_rank[ranks[i]].push_back(i);
  std::vector<std::pair<int, int>> covers;
  for (int rk = 0; rk < len; ++rk)
    for (int a : by_rank[rk])
      for (int b : by_rank[rk + 1])
        if (leq_et(a, b)) covers.emplace_back(a, b);

  r.poset = GradedPoset::from_covers(ranks, covers);
  // the order is graded, so consecutive-rank comparabilities generate it;
  // verify the closure against the defining relation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.poset.leq(a, b) != (a == b || (ranks[a] < ranks[b] && leq_et(a, b))))
        throw Error("NotGraded", "interval order not generated by its covers");
  return r;
}

std::vector<long long> et_fvector_formula(const GradedPoset& l, int t) {
  check_t(l, t);
  const int d = l.length() - 1;
  std::vector<long long> f(d + 2, 0);
  for (int k = -1; k <= d - 2; ++k) {
    long long total = 0;
    for (int i = -1; i < t; ++i) {
      int j = i + d - k;
      if (j <= t || j > d) continue;
      total += flag_number(l, {i, j});
    }
    f[k + 1] = total;
  }
  f[d] = flag_number(l, {t});
  f[d + 1] = 1;
  return f;
}

bool et_two_simple_criterion(const GradedPoset& l, int t) {
  const int d = l.length() - 1;
  if (t < 1 || t > d - 2)
    throw Error("BadT", "criterion needs 1 <= t <= d-2, got t=" + std::to_string(t));
  return flag_number(l, {t - 2, t, t + 2}) == 6 * flag_number(l, {t - 2, t + 2});
}

GradedPoset d_construction(const GradedPoset& l, int k) {
  check_t(l, k);
  return opposite(et(l, k).poset);
}

}  // namespace etlib
