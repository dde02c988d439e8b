#pragma once

#include <optional>
#include <vector>

#include "okbody/rational.hpp"

namespace okbody {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

RatMatrix identity_matrix(std::size_t n);

/// Exact determinant by Gaussian elimination.
Rat determinant(RatMatrix m);

/// Exact inverse; nullopt for singular input.
std::optional<RatMatrix> inverse(RatMatrix m);

RatVector multiply(const RatMatrix& m, const RatVector& v);

/// Counts of positive, negative and zero squares in a diagonalization of a
/// symmetric matrix (Sylvester inertia), computed by congruence.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Inertia inertia(RatMatrix symmetric);

/// Leading principal minors alternate in sign starting negative.
bool is_negative_definite(const RatMatrix& symmetric);

}  // namespace okbody
