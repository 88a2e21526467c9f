#pragma once

// Surface families f = prod s_i - s^3 (direct) and f = (prod s_i - s^3)/r
// (residual), their cusp counts, and the explicit Fermat-type sextic.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuspcodes/mpoly.hpp"

namespace cuspcodes {

/// Degrees d_1..d_k in the order given; the order fixes code block order.
struct PartitionType {
  std::vector<unsigned> parts;

  unsigned degree() const noexcept;
  std::size_t size() const noexcept { return parts.size(); }
  /// "1,2,3"
  std::string to_string() const;
  /// Compact form used in tables, e.g. "123" or "1,1,10" when a part exceeds 9.
  std::string label() const;
  /// Accepts "1,2,3"; throws SyntaxError or PartitionMismatch (empty / zero part).
  static PartitionType parse(std::string_view text);
};

/// Pairs (i, j), i < j, 0-based, ordered by j then i: (0,1) (0,2) (1,2) (0,3) ...
std::vector<std::pair<unsigned, unsigned>> pair_order(std::size_t k);

struct PairCount {
  unsigned i = 0, j = 0;  // 0-based
  unsigned n = 0;
};

struct CuspCounts {
  unsigned degree = 0;
  std::vector<PairCount> pairs;  // in pair_order
  unsigned total = 0;
  unsigned count_for(unsigned i, unsigned j) const;
};

/// n_ij = d_i d_j d/3. Throws DegreeNotDivisibleBy3, PartitionMismatch.
CuspCounts count_direct(unsigned d, const PartitionType& parts);

/// Residual surface of degree d = 3c - b with n_ij = 3 c_i c_j (d - b).
/// Throws DegreeConstraintViolated unless 3c_i >= b and c >= b.
CuspCounts count_residual(const std::vector<unsigned>& c, unsigned b);

/// floor(d (d-1)^2 / 4).
unsigned miyaoka_bound(unsigned d);

/// Partition types of the tabulated direct constructions, in table order.
const std::vector<PartitionType>& tabulated_direct_types(unsigned d);

struct ResidualRow {
  std::vector<unsigned> c;
  unsigned b;
};
/// Rows of the tabulated residual constructions.
const std::vector<ResidualRow>& tabulated_residual_rows();

enum class RecipeKind { Direct, Residual, Fermat };
std::string_view kind_name(RecipeKind k);

struct SurfaceRecipe {
  RecipeKind kind = RecipeKind::Direct;
  Field field;
  std::uint64_t seed = 0;
  PartitionType parts;        // degrees of s_1..s_k
  std::vector<unsigned> c;    // residual: degrees of r_1..r_k
  unsigned b = 0;             // residual: degree of r
  std::vector<MPoly> s;       // s_1..s_k
  MPoly shared;               // s
  MPoly r, t;                 // residual data
  std::vector<MPoly> r_parts, t_parts;
  std::vector<Fel> lambda;    // Fermat parameters
  MPoly f;

  unsigned degree() const { return static_cast<unsigned>(f.total_degree()); }
  /// Closed-form cusp counts for this recipe.
  CuspCounts expected_counts() const;
};

SurfaceRecipe build_direct(const PartitionType& parts, const Field& field, std::uint64_t seed);

/// Throws DegreeConstraintViolated; NotDivisible would indicate a bug.
SurfaceRecipe build_residual(const std::vector<unsigned>& c, unsigned b, const Field& field, std::uint64_t seed);

/// r = x0^3 + ... + x3^3, s_i = x_i^3 + lambda_i r, s = x1 x2 x3, f = (s1 s2 s3 - s^3)/r.
/// Throws ZeroLambda, and Unsupported if the quotient disagrees with the
/// expanded closed form.
SurfaceRecipe fermat_family(const std::array<Fel, 3>& lambda, const Field& field);

/// Closed form of the Fermat-family quotient, assembled term by term.
MPoly fermat_expanded(const std::array<Fel, 3>& lambda, const Field& field);

/// Writes manifest.txt (key=value) and one polynomial file per component.
void write_recipe(const SurfaceRecipe& recipe, const std::filesystem::path& dir);
/// Reads a directory written by write_recipe.
SurfaceRecipe read_recipe(const std::filesystem::path& dir);

}  // namespace cuspcodes
