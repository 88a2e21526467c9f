#pragma once

// Dense Gaussian elimination over a finite field.

#include <optional>
#include <vector>

#include "cuspcodes/ffield.hpp"

namespace cuspcodes {

using FelMatrix = std::vector<std::vector<Fel>>;

/// Rank of a matrix whose entries share one field.
std::size_t matrix_rank(FelMatrix m);

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Fel>> nullspace(FelMatrix m, std::size_t cols, const Field& f);

/// Inverse of a square matrix, or nothing when singular.
std::optional<FelMatrix> matrix_inverse(const FelMatrix& m);

}  // namespace cuspcodes
