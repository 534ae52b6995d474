#pragma once

#include <optional>

#include "etlib/rational.hpp"

namespace etlib {

using RatMat = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// One solution of A x = b, or nullopt if the system is inconsistent.
std::optional<RatVec> solve(RatMat a, RatVec b);

// Basis of { x : A x = 0 }.
std::vector<RatVec> kernel(RatMat a);

// Dimension of the affine hull of pts (-1 for the empty set).
int affine_rank(const std::vector<RatVec>& pts);

}  // namespace etlib
