#pragma once

// Ternary codes attached to cusp sets: the words w_i of a partition type,
// spans, proper subcodes, weight enumerators, the involution split, the
// permutation action on parts and the refinement lattice.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cuspcodes/construct.hpp"

namespace cuspcodes {

using Trit = std::uint8_t;  // 0, 1, 2 = -1

/// A word over F_3: optional leading coordinate i0, then one entry per cusp.
struct TWord {
  bool extended = false;
  Trit i0 = 0;
  std::vector<Trit> cusps;

  /// Nonzero cusp coordinates; i0 is not counted.
  std::size_t weight() const noexcept;
  /// i0 first when extended.
  std::vector<Trit> flat() const;
  friend bool operator==(const TWord&, const TWord&) = default;
  std::string to_string() const;
};

TWord operator+(const TWord& a, const TWord& b);
TWord operator*(Trit s, const TWord& w);

/// Block layout: cusps grouped by pair (i, j) in pair_order, block sizes n_ij.
struct BlockLayout {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::vector<unsigned> sizes;

  std::size_t length() const noexcept;
  std::size_t offset(std::size_t block) const noexcept;
  /// Index of block (i, j) with i < j; throws PartitionMismatch.
  std::size_t block_of(unsigned i, unsigned j) const;
  static BlockLayout from_counts(const CuspCounts& counts);
};

struct TCode {
  BlockLayout layout;
  bool extended = false;
  std::vector<TWord> generators;

  std::size_t length() const noexcept { return layout.length() + (extended ? 1 : 0); }
  std::size_t dimension() const;
  /// Reduced row echelon basis of the span.
  std::vector<TWord> basis() const;
  bool contains(const TWord& w) const;
  /// Every member word, 3^dim of them; throws TooLarge above dimension 16.
  std::vector<TWord> members() const;
  /// Generator matrix text: block header then one word per line.
  std::string matrix_text() const;
};

/// Extended words w_1..w_k: i0 = d_i mod 3, +1 on blocks (i, j) with j > i,
/// -1 on blocks (j, i) with j < i, 0 elsewhere.
std::vector<TWord> words_for_type(const PartitionType& parts, unsigned d);
/// Same rule with an explicit layout (used for residual cusp sets).
std::vector<TWord> words_for_layout(const std::vector<unsigned>& degrees, const BlockLayout& layout);

/// Throws LengthMismatch when generators disagree with the layout.
TCode code_span(const BlockLayout& layout, bool extended, const std::vector<TWord>& gens);
/// Extended code spanned by the words of a direct type of degree d.
TCode extended_code(const PartitionType& parts, unsigned d);

/// Members with i0 = 0, i0 dropped. Throws NotExtended.
TCode proper_subcode(const TCode& e);

/// weight -> number of member words. Throws TooLarge above dimension 16.
std::map<std::size_t, std::uint64_t> weight_enumerator(const TCode& c);

/// Pairing that swaps the two halves of every block.
std::vector<std::size_t> half_swap_pairing(const BlockLayout& layout);

struct InvolutionSplit {
  TCode plus, minus;
  bool direct_sum = false;  // dims add up and the parts meet in 0
};
/// Invariant and anti-invariant parts under a fixed-point-free involution of
/// the cusp coordinates that keeps every block. Throws BadPairing.
InvolutionSplit involution_split(const TCode& c, const std::vector<std::size_t>& pairing);

/// Image of the code under a permutation of the parts (sigma[i] = new index),
/// block (i, j) going to (sigma i, sigma j) with sign -1 when the order flips.
/// Throws DegreeMismatchUnderPermutation unless degrees are preserved.
TCode sigma_action(const TCode& c, const PartitionType& parts, const std::vector<unsigned>& sigma);

struct RefinementCheck {
  PartitionType coarse, fine;
  std::size_t coarse_dim = 0, fine_dim = 0, image_dim = 0;
  bool image_in_fine = false;
  bool ok = false;  // image is a subcode, injective, and dimension grows
};
/// Embeds the extended code of `coarse` into that of `fine`, where fine is
/// coarse with one part split in two (parts may be listed in any order).
/// Throws NotASubPartition.
RefinementCheck refine_embed(const PartitionType& coarse, const PartitionType& fine, unsigned d = 6);

struct LatticeReport {
  std::vector<std::pair<PartitionType, std::size_t>> dims;
  std::vector<RefinementCheck> arrows;
  bool ok = false;
  std::string to_text() const;
};
/// Dimensions of the extended codes of all sextic types and the checks of
/// every inclusion arrow between them.
LatticeReport sextic_lattice();

struct Cusps27Report {
  TCode proper;
  std::vector<TWord> listed;   // the two printed words
  bool listed_are_members = false;
  TWord sum;                   // sum of the listed words
  std::map<std::size_t, std::uint64_t> enumerator;
  std::string to_text() const;
};
/// Code of the residual sextic with c = (1,1,1), b = 3.
Cusps27Report cusps27();

}  // namespace cuspcodes
