#pragma once

// Singular points of surfaces in P^3 over finite fields: rational scans,
// local classification (A1 / A2 / worse), triple intersections S_i, S_j, S
// and the admissibility certificate of a recipe.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuspcodes/construct.hpp"
#include "cuspcodes/mpoly.hpp"
#include "cuspcodes/upoly.hpp"

namespace cuspcodes {

enum class Classification { A1, A2, AkOrWorse, Unclassified };
std::string_view classification_name(Classification c);

struct SingularPoint {
  ProjPoint point;
  Classification type = Classification::Unclassified;
  int pair_i = -1, pair_j = -1;  // owning pair when known, 0-based
};

/// All points of P^3(F_p) where the four partials of f vanish, sorted.
/// Throws CharacteristicDividesDegree when p | deg f.
std::vector<SingularPoint> scan_rational_singular(const MPoly& f, unsigned workers = 1);

/// Same scan over all points of P^3(K) for a small field K (q^3 points).
std::vector<SingularPoint> scan_singular_over(const MPoly& f, const Field& K, unsigned workers = 1);

/// Caches the partial derivatives of f up to order three.
class SingularityClassifier {
 public:
  explicit SingularityClassifier(const MPoly& f);

  /// Throws NotSingular when f or a partial is nonzero at P.
  Classification classify(const ProjPoint& p) const;
  bool is_singular(const ProjPoint& p) const;

 private:
  MPoly f_;
  std::array<MPoly, kVars> d1_;
  std::array<std::array<MPoly, kVars>, kVars> d2_;
  std::vector<MPoly> d3_;  // index (i*4 + j)*4 + k, symmetric
};

Classification classify_singularity(const MPoly& f, const ProjPoint& p);

struct TriplePoint {
  ProjPoint point;
  unsigned multiplicity = 1;  // intersection multiplicity
  bool transversal = false;   // Jacobian of the three polynomials has rank 3
  std::size_t orbit = 0;      // index of the Galois orbit inside the solution
};

struct SolveOptions {
  unsigned ext_budget = 24;
  std::uint64_t seed = 0;
  unsigned max_attempts = 8;
};

struct TripleSolution {
  std::vector<TriplePoint> points;  // every conjugate listed
  unsigned bezout = 0;
  unsigned resolved_multiplicity = 0;
  /// Multiplicity carried by candidate factors above the extension budget.
  unsigned unresolved_multiplicity = 0;
  std::vector<UPoly> unresolved_factors;
  /// Squarefree decomposition of the part of the elimination image that
  /// comes from actual solutions: (product of factors, multiplicity).
  std::vector<SquarefreeFactor> image_decomposition;
  unsigned attempts = 0;

  bool complete() const noexcept { return unresolved_multiplicity == 0 && resolved_multiplicity == bezout; }
};

/// Common zeros of a, b, c in P^3 over extensions up to ext_budget, with
/// intersection multiplicities. Throws NotZeroDimensional, and ChartMisses
/// when no coordinate change yields consistent accounting.
TripleSolution solve_triple(const MPoly& a, const MPoly& b, const MPoly& c, const SolveOptions& opts = {});

struct CuspRecord {
  ProjPoint point;
  unsigned pair_i = 0, pair_j = 0;  // 0-based
  Classification type = Classification::Unclassified;
  unsigned multiplicity = 1;
  bool transversal = false;
};

struct PairReport {
  unsigned i = 0, j = 0;
  unsigned expected = 0;        // closed-form cusp count
  unsigned found = 0;           // cusp points found (off the residual surface)
  unsigned residual_points = 0; // points on the residual surface
  std::vector<unsigned> residual_multiplicities;
  unsigned expected_residual_points = 0;
  unsigned bezout = 0;
  unsigned resolved = 0;
  unsigned unresolved = 0;
  unsigned attempts = 0;
  bool ok = false;
};

struct VerifyOptions {
  unsigned ext_budget = 24;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Also scan P^3(F_{p^2}); only sensible for p <= 11.
  bool scan_quadratic = false;
};

struct AdmissibilityCertificate {
  bool passed = false;
  std::string recipe;  // one-line description
  std::vector<PairReport> pairs;
  std::vector<CuspRecord> cusps;
  std::vector<SingularPoint> scan_singular;  // singular points found by the scans
  unsigned off_cusp_singular = 0;
  std::uint64_t scanned_points = 0;
  std::uint64_t scan_prime = 0;
  unsigned scan_field_degree = 1;
  std::vector<std::string> diagnostics;

  std::size_t cusp_count() const noexcept { return cusps.size(); }
  std::size_t a2_count() const noexcept;
  /// Plain-text report, one record per cusp.
  std::string to_text() const;
};

/// Solves every pair system of the recipe, checks counts, transversality and
/// A2 type of every cusp, and scans for other rational singular points.
/// Failures land in the certificate; nothing is thrown for a bad sample.
AdmissibilityCertificate verify_admissible(const SurfaceRecipe& recipe, const VerifyOptions& opts = {});

struct BezoutReport {
  unsigned i = 0, j = 0;
  unsigned bezout = 0;               // 9 c_i c_j c
  unsigned off_residual = 0;         // transversal points with r != 0
  unsigned residual_points = 0;      // points with r = 0
  std::vector<unsigned> residual_multiplicities;
  unsigned expected_cusps = 0;       // n_ij
  unsigned expected_residual_points = 0;  // c_i c_j b
  std::vector<SquarefreeFactor> image_decomposition;
  bool ok = false;

  std::string to_text() const;
};

struct FermatSearchResult {
  bool found = false;
  std::array<std::uint64_t, 3> lambda{};
  unsigned tried = 0;
  AdmissibilityCertificate certificate;  // of the accepted lambda, or the last one tried
};

/// Tries lambda in {1,2,3}^3 in an order shuffled by `seed` and returns the
/// first Fermat-family sextic whose certificate passes.
FermatSearchResult fermat_search(const Field& field, std::uint64_t seed, const VerifyOptions& opts = {});

/// Intersection accounting of S_i, S_j, S for a residual recipe:
/// bezout = n_ij + 6 c_i c_j b with each residual point of multiplicity 6.
BezoutReport bezout_accounting(const SurfaceRecipe& recipe, unsigned i, unsigned j, const SolveOptions& opts = {});

}  // namespace cuspcodes
