#pragma once

// Projection of a zero-dimensional system a = b = c = 0 in P^3 onto one
// coordinate line, by two rounds of resultants after a seeded random linear
// change of coordinates.

#include <array>
#include <cstdint>

#include "cuspcodes/mpoly.hpp"
#include "cuspcodes/upoly.hpp"

namespace cuspcodes {

using Matrix4 = std::array<std::array<Fel, kVars>, kVars>;

/// Variables of the transformed system: `keep` survives, `elim` goes in the
/// second resultant, `inner` in the first. The chart variable is set to 1.
struct EliminationOrder {
  int keep = 1;
  int elim = 2;
  int inner = 3;
};

struct EliminationOptions {
  int chart = 0;
  EliminationOrder order{};
  std::uint64_t seed = 0;
  unsigned first_attempt = 0;
  unsigned max_attempts = 8;
};

struct Elimination {
  /// Res_elim(Res_inner(a, b), Res_inner(a, c)) in the kept variable. Its
  /// roots contain the projections of all solutions, with multiplicity,
  /// plus extraneous roots.
  UPoly image;
  /// Squarefree gcd of `image` with a second projection built from
  /// Res_inner(b, c); extraneous roots are removed generically.
  UPoly candidates;
  Matrix4 transform;  // x = transform * y
  int chart = 0;
  EliminationOrder order{};
  /// Transformed, dehomogenized system; `pivot` is the polynomial used in
  /// both first-round resultants.
  std::array<MPoly, 3> system;
  MPoly r1, r2;  // Res_inner(pivot, other_1), Res_inner(pivot, other_2)
  unsigned attempt = 0;
  int bezout = 0;
};

/// Picks the lowest-degree polynomial as pivot (ties prefer c, then a).
/// Retries with fresh coordinate changes until the leading-coefficient
/// certificates pass. Throws NotZeroDimensional when a resultant vanishes
/// identically on every attempt, ChartMisses when certificates keep failing.
Elimination mp_eliminate_pair(const MPoly& a, const MPoly& b, const MPoly& c, const EliminationOptions& opts = {});

/// Random invertible matrix over the prime field, reproducible from the seed.
Matrix4 random_invertible(const Field& f, std::uint64_t seed);

/// Point x = m * y.
Point4 apply_matrix(const Matrix4& m, const Point4& y);

}  // namespace cuspcodes
