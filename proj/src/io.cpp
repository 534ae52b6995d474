#include "etlib/io.hpp"

#include <fstream>
#include <sstream>

namespace etlib {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rat as_rat(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) bad(std::string(what) + " must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

Json rats(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(format_rat(q));
  return a;
}

RatVec as_ratvec(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  RatVec v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(as_rat(e, what));
  return v;
}

Json save_plane(const Hyperplane& h) {
  return Json{{"a", rats(h.a)}, {"b", format_rat(h.b)}};
}

Hyperplane load_plane(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  return Hyperplane{as_ratvec(field(j, "a"), what), as_rat(field(j, "b"), what)};
}

}  // namespace

Json save_lattice(const GradedPoset& p) {
  Json els = Json::array();
  for (int x = 0; x < p.size(); ++x)
    els.push_back(Json{{"id", x}, {"rank", p.rank(x)}, {"covers", p.upper_covers(x)}});
  return Json{{"length", p.length()},
              {"elements", std::move(els)},
              {"bottom", p.bottom()},
              {"top", p.top()}};
}

Json save_lattice(const EtResult& e) {
  Json doc = save_lattice(e.poset);
  for (Json& el : doc["elements"]) {
    const EtElement& ee = e.elems[el["id"].get<int>()];
    switch (ee.kind) {
      case EtElement::Kind::TopEmpty:
        el["kind"] = "empty";
        break;
      case EtElement::Kind::Singleton:
        el["kind"] = "singleton";
        el["y"] = ee.x;
        break;
      case EtElement::Kind::Interval:
        el["kind"] = "interval";
        el["x"] = ee.x;
        el["z"] = ee.z;
        break;
    }
  }
  return doc;
}

GradedPoset load_lattice(const Json& doc) {
  const Json& els = field(doc, "elements");
  if (!els.is_array() || els.empty()) bad("elements must be a nonempty array");
  const int n = static_cast<int>(els.size());
  std::vector<int> ranks(n, -1);
  std::vector<std::pair<int, int>> covers;
  for (const Json& e : els) {
    if (!e.is_object()) bad("elements entries must be objects");
    int id = as_int(field(e, "id"), "element id");
    if (id < 0 || id >= n) bad("element ids must be dense 0..n-1");
    if (ranks[id] >= 0) bad("duplicate element id " + std::to_string(id));
    ranks[id] = as_int(field(e, "rank"), "rank");
    const Json& cov = field(e, "covers");
    if (!cov.is_array()) bad("covers must be an array");
    for (const Json& c : cov) {
      int y = as_int(c, "cover id");
      if (y < 0 || y >= n) bad("cover id out of range");
      covers.emplace_back(id, y);
    }
  }
  GradedPoset p = GradedPoset::from_covers(std::move(ranks), covers);
  if (as_int(field(doc, "length"), "length") != p.length())
    bad("length does not match the rank span");
  if (as_int(field(doc, "bottom"), "bottom") != p.bottom())
    bad("bottom does not name the minimum");
  if (as_int(field(doc, "top"), "top") != p.top()) bad("top does not name the maximum");
  return p;
}

Json save_polytope(const VHPolytope& p) {
  Json hull = Json::array();
  for (const Hyperplane& h : p.hull) {
    RatVec row = h.a;
    row.push_back(h.b);
    hull.push_back(rats(row));
  }
  Json verts = Json::array();
  for (const RatVec& v : p.vertices) verts.push_back(rats(v));
  Json facets = Json::array();
  for (const Hyperplane& h : p.facets) facets.push_back(save_plane(h));
  Json doc{{"ambient", p.ambient},
           {"hull", std::move(hull)},
           {"vertices", std::move(verts)},
           {"facets", std::move(facets)},
           {"center", rats(p.center)}};
  if (p.r2) doc["r2"] = format_rat(*p.r2);
  return doc;
}

VHPolytope load_polytope(const Json& doc) {
  VHPolytope p;
  p.ambient = as_int(field(doc, "ambient"), "ambient");
  if (p.ambient <= 0) bad("ambient must be positive");
  const Json& hull = field(doc, "hull");
  if (!hull.is_array()) bad("hull must be an array");
  for (const Json& row : hull) {
    RatVec r = as_ratvec(row, "hull row");
    if (static_cast<int>(r.size()) != p.ambient + 1)
      bad("hull rows carry the coefficients and the constant term");
    Rat b = r.back();
    r.pop_back();
    p.hull.push_back(Hyperplane{std::move(r), b});
  }
  const Json& verts = field(doc, "vertices");
  if (!verts.is_array() || verts.empty()) bad("vertices must be a nonempty array");
  for (const Json& v : verts) p.vertices.push_back(as_ratvec(v, "vertex"));
  const Json& facets = field(doc, "facets");
  if (!facets.is_array() || facets.empty()) bad("facets must be a nonempty array");
  for (const Json& f : facets) p.facets.push_back(load_plane(f, "facet"));
  if (auto it = doc.find("center"); it != doc.end()) p.center = as_ratvec(*it, "center");
  if (auto it = doc.find("r2"); it != doc.end()) p.r2 = as_rat(*it, "r2");
  return p;
}

Json save_cut_system(const CutSystem& cs) {
  Json cuts = Json::array();
  for (int v = 0; v < static_cast<int>(cs.cuts.size()); ++v) {
    Json c = save_plane(cs.cuts[v]);
    c["vertex"] = v;
    cuts.push_back(std::move(c));
  }
  Json eps = Json::array();
  for (const auto& [e, pt] : cs.edge_points)
    eps.push_back(Json{{"edge", {e.first, e.second}}, {"point", rats(pt)}});
  return Json{{"cuts", std::move(cuts)}, {"edge_points", std::move(eps)}};
}

CutSystem load_cut_system(const Json& doc) {
  const Json& cuts = field(doc, "cuts");
  if (!cuts.is_array() || cuts.empty()) bad("cuts must be a nonempty array");
  CutSystem cs;
  cs.cuts.resize(cuts.size());
  std::vector<bool> seen(cuts.size(), false);
  for (const Json& c : cuts) {
    int v = as_int(field(c, "vertex"), "cut vertex");
    if (v < 0 || v >= static_cast<int>(cs.cuts.size())) bad("cut vertices must be dense 0..n-1");
    if (seen[v]) bad("duplicate cut for vertex " + std::to_string(v));
    seen[v] = true;
    cs.cuts[v] = load_plane(c, "cut");
  }
  if (auto it = doc.find("edge_points"); it != doc.end()) {
    if (!it->is_array()) bad("edge_points must be an array");
    for (const Json& ep : *it) {
      const Json& e = field(ep, "edge");
      if (!e.is_array() || e.size() != 2) bad("edge must name two vertices");
      int v = as_int(e[0], "edge vertex"), w = as_int(e[1], "edge vertex");
      cs.edge_points[{v, w}] = as_ratvec(field(ep, "point"), "edge point");
    }
  }
  return cs;
}

Json save_chain_point(const ChainPoint& c) {
  return Json{{"chain", c.chain}, {"weights", rats(c.weights)}};
}

ChainPoint load_chain_point(const Json& doc) {
  const Json& chain = field(doc, "chain");
  if (!chain.is_array()) bad("chain must be an array");
  ChainPoint c;
  for (const Json& e : chain) c.chain.push_back(as_int(e, "chain element"));
  c.weights = as_ratvec(field(doc, "weights"), "weight");
  return c;
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error("ParseError", where + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

DocKind detect_kind(const Json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (doc.contains("elements")) return DocKind::Lattice;
  if (doc.contains("vertices") && doc.contains("facets")) return DocKind::Polytope;
  if (doc.contains("cuts")) return DocKind::CutSystem;
  if (doc.contains("chain")) return DocKind::ChainPoint;
  bad("unrecognized document type");
}

}  // namespace etlib
