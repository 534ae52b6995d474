#pragma once

#include <string>

#include "json.hpp"

#include "etlib/constructions.hpp"
#include "etlib/et.hpp"
#include "etlib/subdivision.hpp"

namespace etlib {

using Json = nlohmann::json;

// JSON codecs; save/load round exactly, rationals travel as "p/q" strings.
// Loaders throw ParseError naming the offending field; structural poset
// problems (rank gaps and the like) surface with their own codes.

Json save_lattice(const GradedPoset& p);
// Same document with per-element fields recording what each element of the
// interval poset is ({"kind":"interval","x":..,"z":..} etc.).
Json save_lattice(const EtResult& e);
GradedPoset load_lattice(const Json& doc);

Json save_polytope(const VHPolytope& p);
VHPolytope load_polytope(const Json& doc);

Json save_cut_system(const CutSystem& cs);
CutSystem load_cut_system(const Json& doc);

Json save_chain_point(const ChainPoint& c);
ChainPoint load_chain_point(const Json& doc);

Json parse_json(const std::string& text, const std::string& where);
Json load_json_file(const std::string& path);

enum class DocKind { Lattice, Polytope, CutSystem, ChainPoint };
DocKind detect_kind(const Json& doc);

}  // namespace etlib
