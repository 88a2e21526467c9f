#pragma once

// Exterior square of F_3^6 with the permutation action of S_6, the subspace
// e ^ U, and the exhaustive check that every invariant code with weights in
// {0, 9, 12, 15} lies in e ^ U.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspcodes/cuspcode.hpp"

namespace cuspcodes {

constexpr int kWedgeDim = 15;

/// Coordinates at pairs (i, j), i < j, 0-based, in order (0,1) (0,2) (1,2) (0,3) ...
using WedgeVec = std::array<Trit, kWedgeDim>;
using Vec6 = std::array<Trit, 6>;
using Perm6 = std::array<std::uint8_t, 6>;

/// Position of the pair (i, j), i < j.
constexpr int wedge_index(int i, int j) noexcept { return j * (j - 1) / 2 + i; }

std::size_t wedge_weight(const WedgeVec& v) noexcept;
WedgeVec wedge_add(const WedgeVec& a, const WedgeVec& b) noexcept;
WedgeVec wedge_scale(Trit s, const WedgeVec& v) noexcept;
/// sum v_k 3^k
std::uint32_t wedge_to_index(const WedgeVec& v) noexcept;
WedgeVec wedge_from_index(std::uint32_t idx) noexcept;
std::string wedge_to_string(const WedgeVec& v);

/// (u ^ v)_ij = u_i v_j - u_j v_i.
WedgeVec wedge_of(const Vec6& u, const Vec6& v) noexcept;
/// e_i ^ e_j for any i != j (sign from the order).
WedgeVec wedge_unit(int i, int j) noexcept;

struct UWords {
  std::array<WedgeVec, 6> u;                 // u_i = sum_k e_i ^ e_k
  std::array<std::array<WedgeVec, 6>, 6> uij;  // u_i - u_j
};
UWords u_words();

struct WedgeSubspace {
  std::vector<WedgeVec> basis;  // reduced row echelon form

  std::size_t dimension() const noexcept { return basis.size(); }
  bool contains(const WedgeVec& v) const;
  std::vector<WedgeVec> members() const;
  static WedgeSubspace span(const std::vector<WedgeVec>& gens);
};

/// Span of u_{1,2}, ..., u_{1,5}.
WedgeSubspace e_wedge_U();

/// e_ij -> sign * e_{sigma i, sigma j}, sign -1 when sigma i > sigma j.
WedgeVec sigma_on_wedge(const Perm6& sigma, const WedgeVec& v) noexcept;
Perm6 transposition(int i, int j) noexcept;
Perm6 compose(const Perm6& s, const Perm6& t) noexcept;  // (s t)(x) = s(t(x))

/// True for weights 0, 9, 12, 15.
constexpr bool allowed_weight(std::size_t w) noexcept { return w == 0 || w == 9 || w == 12 || w == 15; }

/// v - (i j) v for the first pair with v_ij = 0 whose difference has a
/// weight outside {0, 9, 12, 15}.
std::optional<WedgeVec> transposition_witness(const WedgeVec& v);

/// Smallest S_6-invariant subspace containing v.
WedgeSubspace invariant_span(const WedgeVec& v);

enum class WitnessStage { Member, Weight, Transposition, PairedWords, Random, Unresolved };
const char* stage_name(WitnessStage s);

/// Runs the witness ladder on one vector; `seed` feeds the random stage.
WitnessStage resolve_vector(const WedgeVec& v, std::uint64_t seed, unsigned random_draws = 200);

enum class VerifyMode { Exhaustive, OrbitReduced };

struct WedgeVerifyReport {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t processed = 0;  // vectors (or orbit representatives) examined
  std::uint64_t covered = 0;    // vectors accounted for, orbits expanded
  std::map<WitnessStage, std::uint64_t> by_stage;
  std::map<std::size_t, std::uint64_t> member_weights;  // e ^ U members
  std::vector<WedgeVec> unresolved;
  double seconds = 0;  // wall-clock, kept out of to_text

  bool passed() const;
  std::string to_text() const;
};

WedgeVerifyReport wedge_verify(VerifyMode mode, unsigned workers = 1, std::uint64_t seed = 0);

struct BPlusReport {
  std::size_t doubled_dim = 0;        // dim of {(w, w) : w in e ^ U}
  bool doubled_in_proper = false;     // inside span{w_i - w_j}
  bool spans_equal = false;           // equal to the proper code
  std::map<std::size_t, std::uint64_t> doubled_weights;
  std::size_t proper_dim = 0;
  std::size_t extended_dim = 0;
  std::size_t plus_dim = 0, minus_dim = 0;
  bool ok = false;
  std::string to_text() const;
};

/// Cross-check of e ^ U against the code of type 1,1,1,1,1,1.
BPlusReport bplus_bminus_check();

}  // namespace cuspcodes
