#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "etlib/constructions.hpp"
#include "etlib/et.hpp"
#include "etlib/geometry.hpp"
#include "etlib/io.hpp"
#include "etlib/poset.hpp"
#include "etlib/subdivision.hpp"
#include "etlib/tables.hpp"

using namespace etlib;

namespace {

Json read_doc(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_json(ss.str(), "stdin");
  }
  return load_json_file(path);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Lattice documents load directly; polytope documents contribute their face
// lattice (certifying the polytope on the way).
GradedPoset lattice_of(const Json& doc) {
  switch (detect_kind(doc)) {
    case DocKind::Lattice:
      return load_lattice(doc);
    case DocKind::Polytope:
      return validate(load_polytope(doc)).faces->poset;
    default:
      throw Error("ParseError", "expected a lattice or polytope document");
  }
}

std::string flag_label(const std::vector<int>& s) {
  std::string out = "f";
  for (int i : s) out += std::to_string(i);
  return out;
}

std::vector<int> parse_rank_set(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error("ParseError", "rank selection must be comma-separated integers: '" + s + "'");
    }
  }
  if (out.empty()) throw Error("ParseError", "empty rank selection");
  return out;
}

std::string tuple_str(const std::vector<long long>& f, const std::optional<long long>& f03) {
  std::string out = "(";
  for (size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  if (f03) out += ";" + std::to_string(*f03);
  return out + ")";
}

int run_generate(const std::string& kind, int d, int k, int n, const std::string& plan_file,
                 const std::string& base) {
  std::string key = kind;
  if (key == "halfcube") key = "halfcube_N";
  if (key == "prism") key = "prism_over_simplex";
  if (key == "stacked") {
    std::vector<int> plan;
    if (!plan_file.empty()) {
      Json pd = load_json_file(plan_file);
      if (!pd.is_array()) throw Error("ParseError", "plan must be a JSON array of facet indices");
      for (const Json& e : pd) {
        if (!e.is_number_integer())
          throw Error("ParseError", "plan entries must be facet indices");
        plan.push_back(e.get<int>());
      }
    }
    emit(save_polytope(build_truncatable_stacked(d, plan, base).polytope));
    return 0;
  }
  if (key == "cross_stack") {
    emit(save_polytope(build_cross_stack(n, false).polytope));
    return 0;
  }
  emit(save_polytope(generate(key, d, k)));
  return 0;
}

int run_et(const std::string& in, int t) {
  emit(save_lattice(et(lattice_of(read_doc(in)), t)));
  return 0;
}

int run_dk(const std::string& in, int k) {
  emit(save_lattice(d_construction(lattice_of(read_doc(in)), k)));
  return 0;
}

int run_truncate(const std::string& in, const std::string& cuts_file,
                 const std::string& strategy) {
  VHPolytope p = validate(load_polytope(read_doc(in)));
  CutSystem cs;
  if (!cuts_file.empty()) {
    cs = certify_cut_system(p, load_cut_system(load_json_file(cuts_file)).cuts);
  } else if (strategy == "midpoint") {
    cs = midpoint_cuts(p);
  } else if (strategy == "inductive") {
    cs = inductive_cuts(p);
  } else {
    throw Error("BadParams", "truncate needs --cuts FILE or --strategy midpoint|inductive");
  }
  emit(save_polytope(truncate_all(p, cs)));
  return 0;
}

int run_realize(const std::string& in, int t, const std::string& r2) {
  VHPolytope p = validate(load_polytope(read_doc(in)));
  emit(save_polytope(et_realization(p, t, parse_rat(r2))));
  return 0;
}

int run_check(const std::string& in, bool eulerian, bool lattice, int simplicial, int simple,
              bool two_s_two_s) {
  Json doc = read_doc(in);
  GradedPoset p = lattice_of(doc);  // certifies polytopes, grades lattices
  bool ok = true;
  auto report = [&](const char* name, bool pass) {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    ok = ok && pass;
  };
  if (eulerian) report("eulerian", is_eulerian(p));
  if (lattice) report("lattice", is_lattice(p));
  SimplicialityProfile prof;
  if (simplicial >= 0 || simple >= 0 || two_s_two_s) prof = simpliciality_profile(p);
  if (simplicial >= 0) report("simplicial", prof.max_simplicial >= simplicial);
  if (simple >= 0) report("simple", prof.max_simple >= simple);
  if (two_s_two_s) report("2s2s", prof.max_simplicial >= 2 && prof.max_simple >= 2);
  return ok ? 0 : 1;
}

int run_flags(const std::string& in, const std::vector<std::string>& selections) {
  GradedPoset p = lattice_of(read_doc(in));
  FlagVector fv = flag_vector(p);
  std::string line;
  for (int i = 0; i < fv.d; ++i) line += (i ? " " : "") + std::to_string(fv.fi(i));
  line += " ;";
  std::vector<std::vector<int>> picks;
  if (selections.empty() && fv.d >= 2) picks.push_back({0, fv.d - 1});
  for (const std::string& s : selections) picks.push_back(parse_rank_set(s));
  for (const auto& s : picks)
    line += " " + flag_label(s) + "=" + std::to_string(flag_number(p, s));
  std::cout << line << "\n";
  return 0;
}

int run_iso(const std::string& in, const std::string& other) {
  GradedPoset a = lattice_of(read_doc(in));
  GradedPoset b = lattice_of(load_json_file(other));
  bool iso = are_isomorphic(a, b);
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? 0 : 1;
}

int run_subdivide(const std::string& in, const std::string& lattice_file, int t, bool project) {
  GradedPoset l = lattice_of(load_json_file(lattice_file));
  EtResult e = et(l, t);
  ChainPoint c = load_chain_point(read_doc(in));
  emit(save_chain_point(project ? pi(l, e, c) : pi_inverse(l, e, c)));
  return 0;
}

int run_tables(const std::string& family, long long n, int d, const std::string& format,
               bool check) {
  if (check) {
    bool ok = true;
    for (const ConsistencyItem& item : consistency_suite()) {
      std::cout << item.name << ": " << (item.pass ? "PASS" : "FAIL");
      if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
      std::cout << "\n";
      ok = ok && item.pass;
    }
    return ok ? 0 : 1;
  }

  std::vector<std::string> ids =
      family.empty() ? std::vector<std::string>{"D1P", "D1C", "C4n", "Q", "EQ"}
                     : std::vector<std::string>{family};
  struct Row {
    std::string family;
    long long n;
    FamilyValue v;
    std::string source;
  };
  std::vector<Row> rows;
  for (const std::string& id : ids) {
    FamilyTable ft = family_table(id, d);
    std::vector<long long> ns;
    if (n >= 0)
      ns.push_back(n);
    else
      for (long long i = ft.n_min; i < ft.n_min + 4; ++i) ns.push_back(i);
    for (long long i : ns) rows.push_back({id, i, eval_family(id, i, d), ft.source});
  }

  if (format == "json") {
    Json out = Json::array();
    for (const Row& r : rows) {
      Json row{{"family", r.family}, {"n", r.n}, {"f", r.v.f}, {"source", r.source}};
      if (r.v.f03) row["f03"] = *r.v.f03;
      out.push_back(std::move(row));
    }
    emit(out);
  } else {
    for (const Row& r : rows)
      std::cout << r.family << "\t" << r.n << "\t" << tuple_str(r.v.f, r.v.f03) << "\t"
                << r.source << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval constructions on polytopes and Eulerian lattices"};
  app.require_subcommand(1);
  int rc = 0;

  std::string g_kind, g_plan, g_base = "simplex";
  int g_d = 4, g_k = 2, g_n = 1;
  auto* g = app.add_subcommand("generate", "emit a polytope document");
  g->add_option("kind", g_kind,
                "simplex|cube|cross|hypersimplex|M|halfcube|prism|stacked|cross_stack")
      ->required();
  g->add_option("-d,--dim", g_d, "dimension");
  g->add_option("-k", g_k, "hypersimplex slice");
  g->add_option("-n", g_n, "tower length");
  g->add_option("--plan", g_plan, "JSON list of facet indices (stacked)");
  g->add_option("--base", g_base, "stacked base: simplex|cross");
  g->callback([&] { rc = run_generate(g_kind, g_d, g_k, g_n, g_plan, g_base); });

  std::string et_in, et_t;
  int et_tv = 0;
  auto* e = app.add_subcommand("et", "interval poset of a lattice or polytope");
  e->add_option("input", et_in, "input document (default stdin)");
  e->add_option("-t", et_tv, "interval parameter")->required();
  e->callback([&] { rc = run_et(et_in, et_tv); });

  std::string dk_in;
  int dk_k = 1;
  auto* dk = app.add_subcommand("dk", "opposite of the interval poset");
  dk->add_option("input", dk_in, "input document (default stdin)");
  dk->add_option("-k", dk_k, "interval parameter")->required();
  dk->callback([&] { rc = run_dk(dk_in, dk_k); });

  std::string tr_in, tr_cuts, tr_strategy;
  auto* tr = app.add_subcommand("truncate", "cut every vertex of a polytope");
  tr->add_option("input", tr_in, "input document (default stdin)");
  tr->add_option("--cuts", tr_cuts, "cut system document");
  tr->add_option("--strategy", tr_strategy, "midpoint|inductive");
  tr->callback([&] { rc = run_truncate(tr_in, tr_cuts, tr_strategy); });

  std::string re_in, re_r2 = "1";
  int re_t = 1;
  auto* re = app.add_subcommand("realize", "tangency realization of the interval poset");
  re->add_option("input", re_in, "input document (default stdin)");
  re->add_option("--t", re_t, "interval parameter")->required();
  re->add_option("--r2", re_r2, "squared tangency radius \"p/q\"")->required();
  re->callback([&] { rc = run_realize(re_in, re_t, re_r2); });

  std::string ch_in;
  bool ch_euler = false, ch_lattice = false, ch_2s2s = false;
  int ch_simplicial = -1, ch_simple = -1;
  auto* ch = app.add_subcommand("check", "certify properties; exit 0 iff all pass");
  ch->add_option("input", ch_in, "input document (default stdin)");
  ch->add_flag("--eulerian", ch_euler, "every proper interval balances by rank parity");
  ch->add_flag("--lattice", ch_lattice, "meets and joins exist");
  ch->add_option("--simplicial", ch_simplicial, "faces boolean up to rank K");
  ch->add_option("--simple", ch_simple, "cofaces boolean down to corank H");
  ch->add_flag("--2s2s", ch_2s2s, "2-simplicial and 2-simple");
  ch->callback(
      [&] { rc = run_check(ch_in, ch_euler, ch_lattice, ch_simplicial, ch_simple, ch_2s2s); });

  std::string fl_in;
  std::vector<std::string> fl_sel;
  auto* fl = app.add_subcommand("flags", "proper f-vector and selected flag numbers");
  fl->add_option("input", fl_in, "input document (default stdin)");
  fl->add_option("-s,--select", fl_sel, "comma-separated proper ranks, e.g. 0,3");
  fl->callback([&] { rc = run_flags(fl_in, fl_sel); });

  std::string is_in, is_other;
  auto* is = app.add_subcommand("iso", "lattice isomorphism; exit 0 iff isomorphic");
  is->add_option("other", is_other, "document to compare against")->required();
  is->add_option("-i,--input", is_in, "input document (default stdin)");
  is->callback([&] { rc = run_iso(is_in, is_other); });

  std::string su_in, su_lattice;
  int su_t = 0;
  bool su_project = false;
  auto* su = app.add_subcommand("subdivide",
                                "carry a point between a lattice and its interval poset");
  su->add_option("input", su_in, "chain point document (default stdin)");
  su->add_option("--lattice", su_lattice, "lattice document")->required();
  su->add_option("-t", su_t, "interval parameter")->required();
  su->add_flag("--project", su_project,
               "map a point of the interval poset back down instead");
  su->callback([&] { rc = run_subdivide(su_in, su_lattice, su_t, su_project); });

  std::string tb_family, tb_format = "tsv";
  long long tb_n = -1;
  int tb_d = 4;
  bool tb_check = false;
  auto* tb = app.add_subcommand("tables", "family f-vector tables");
  tb->add_option("--family", tb_family, "D1P|D1C|C4n|Q|EQ (default: all)");
  tb->add_option("-n", tb_n, "parameter value (default: a short range)");
  tb->add_option("-d,--dim", tb_d, "dimension for Q/EQ");
  tb->add_option("--format", tb_format, "tsv|json");
  tb->add_flag("--check", tb_check, "run the consistency suite instead");
  tb->callback([&] { rc = run_tables(tb_family, tb_n, tb_d, tb_format, tb_check); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const Error& err) {
    std::string what = err.what();
    std::string detail = what.substr(err.code().size() + 2);
    std::cerr << Json{{"error", err.code()}, {"detail", detail}}.dump() << "\n";
    return 2;
  }
  return rc;
}
