#include "etlib/rational.hpp"

namespace etlib {

Rat parse_rat(const std::string& s) {
  auto bad = [&]() -> Error { return Error("ParseError", "not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string ps = slash == std::string::npos ? s : s.substr(0, slash);
  std::string qs = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(ps) || !is_int(qs)) throw bad();
  Int p(ps), q(qs);
  if (q == 0) throw Error("ParseError", "zero denominator: '" + s + "'");
  return Rat(p, q);
}

std::string format_rat(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void check_dim(const RatVec& a, int n, const char* what) {
  if (static_cast<int>(a.size()) != n)
    throw Error("DimensionMismatch", std::string(what) + ": expected " +
                                         std::to_string(n) + " entries, got " +
                                         std::to_string(a.size()));
}

static void check_dim(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw Error("DimensionMismatch", "vector sizes " + std::to_string(a.size()) + " vs " +
                                         std::to_string(b.size()));
}

Rat dot(const RatVec& a, const RatVec& b) {
  check_dim(a, b);
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vadd(const RatVec& a, const RatVec& b) {
  check_dim(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vsub(const RatVec& a, const RatVec& b) {
  check_dim(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vscale(const Rat& s, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rat norm2(const RatVec& a) { return dot(a, a); }

RatVec centroid(const std::vector<RatVec>& pts) {
  if (pts.empty()) throw Error("BadParams", "centroid of empty point set");
  RatVec c(pts[0].size(), 0);
  for (const auto& p : pts) c = vadd(c, p);
  return vscale(Rat(1, static_cast<long>(pts.size())), c);
}

}  // namespace etlib
