#pragma once

#include "nilorbit/common.hpp"

#include <optional>
#include <vector>

namespace nilorbit {

// Dense rational matrices, stored as rows. Sizes here stay below ~250, so
// plain fraction Gaussian elimination is exact and fast enough.
using QMat = std::vector<QVec>;

std::size_t q_rank(QMat m);

// One solution of A x = b over Q, if consistent.
std::optional<QVec> q_solve(QMat a, QVec b);

// Basis of {v : A v = 0}.
std::vector<QVec> q_kernel(QMat a);

// Inverse of a square nonsingular matrix; throws CheckFailure if singular.
QMat q_inverse(QMat a);

}  // namespace nilorbit
