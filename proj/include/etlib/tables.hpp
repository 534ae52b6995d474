#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etlib/rational.hpp"

namespace etlib {

// Affine form a*n + b, kept as data so the symbolic shape can be printed.
struct LinearForm {
  long long a = 0, b = 0;
  long long at(long long n) const { return a * n + b; }
  std::string str() const;
};

// Closed-form flag counts of one polytope family, entrywise affine in the
// family parameter n.
struct FamilyTable {
  std::string id;
  std::string source;  // construction behind the numbers
  int dim;
  long long n_min;                // domain is n >= n_min
  std::vector<LinearForm> f;      // proper f-vector entries
  std::optional<LinearForm> f03;  // vertex-facet incidences where fixed
};

// Families: D1P (truncated stacked simplices), D1C (truncated glued
// crosses), C4n (glued crosses), Q (glued cubes, formulas only) and
// EQ (middle interval construction over Q).  d is read for Q/EQ only.
FamilyTable family_table(const std::string& id, int d = 4);

// The general interval-count line of the Q family at index j; it disagrees
// with the dedicated j = d-2 line, which wins (see consistency_suite).
LinearForm q_general_line(int d, int j);

struct FamilyValue {
  std::vector<long long> f;
  std::optional<long long> f03;
};
FamilyValue eval_family(const std::string& id, long long n, int d = 4);

struct ConsistencyItem {
  std::string name;
  bool pass;
  std::string detail;
};

// Cross-checks the tables against each other and against bodies built by
// the constructions module; ambiguities in the sources are surfaced as
// informational items rather than silently fixed.
std::vector<ConsistencyItem> consistency_suite();

}  // namespace etlib
