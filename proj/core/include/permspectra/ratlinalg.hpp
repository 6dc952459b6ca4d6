#pragma once

#include <optional>
#include <vector>

#include "permspectra/rational.hpp"

namespace permspectra {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;
using IntMatrix = std::vector<std::vector<Int>>;

int rank(RatMatrix a);

/// One solution of A x = b (any shape), or nullopt if inconsistent.
std::optional<RatVector> solve_linear(RatMatrix a, RatVector b);

/// Basis of the nullspace of A.
std::vector<RatVector> nullspace(RatMatrix a);

/// Minimum-Euclidean-norm solution of the (consistent) system A x = b:
/// x = A^T y with (A A^T) y = b restricted to independent rows.
std::optional<RatVector> min_norm_solution(const RatMatrix& a, const RatVector& b);

/// Characteristic polynomial of a square integer matrix by
/// Faddeev-LeVerrier; coefficients returned from x^N down to the constant.
std::vector<Int> char_poly(const IntMatrix& m);

/// Divide poly by (x - root) as often as it divides exactly; returns the
/// multiplicity and leaves the quotient in poly (highest degree first).
int extract_root_multiplicity(std::vector<Int>& poly, const Int& root);

}  // namespace permspectra
