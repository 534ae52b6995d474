#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace etlib {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;

// Recoverable failures carry a stable machine-readable code ("NotGraded",
// "ParseError", ...) plus a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Accepts "p" or "p/q" with optional sign; q must be nonzero (GMP aborts on
// zero denominators, so the guard lives here).
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the value is integral, "p/q" otherwise.
std::string format_rat(const Rat& q);

// Throws DimensionMismatch unless a has exactly n entries.
void check_dim(const RatVec& a, int n, const char* what);

Rat dot(const RatVec& a, const RatVec& b);
RatVec vadd(const RatVec& a, const RatVec& b);
RatVec vsub(const RatVec& a, const RatVec& b);
RatVec vscale(const Rat& s, const RatVec& a);
Rat norm2(const RatVec& a);
RatVec centroid(const std::vector<RatVec>& pts);

}  // namespace etlib
