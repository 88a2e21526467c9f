#include "cuspcodes/cuspcode.hpp"

#include <algorithm>
#include <sstream>

namespace cuspcodes {

namespace {

Trit add3(Trit a, Trit b) { return static_cast<Trit>((a + b) % 3); }
Trit mul3(Trit a, Trit b) { return static_cast<Trit>((a * b) % 3); }
Trit neg3(Trit a) { return static_cast<Trit>((3 - a) % 3); }

using Rows = std::vector<std::vector<Trit>>;

// Reduced row echelon form over F_3, zero rows removed.
Rows rref3(Rows m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    if (m[row][col] == 2)
      for (auto& x : m[row]) x = mul3(x, 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Trit f = neg3(m[r][col]);
      for (std::size_t c = col; c < cols; ++c) m[r][c] = add3(m[r][c], mul3(f, m[row][c]));
    }
    ++row;
  }
  m.resize(row);
  return m;
}

TWord from_flat(const std::vector<Trit>& v, bool extended) {
  TWord w;
  w.extended = extended;
  if (extended) {
    w.i0 = v.at(0);
    w.cusps.assign(v.begin() + 1, v.end());
  } else {
    w.cusps = v;
  }
  return w;
}

Rows flat_rows(const std::vector<TWord>& ws) {
  Rows r;
  for (const auto& w : ws) r.push_back(w.flat());
  return r;
}

}  // namespace

std::size_t TWord::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(cusps.begin(), cusps.end(), [](Trit t) { return t != 0; }));
}

std::vector<Trit> TWord::flat() const {
  std::vector<Trit> v;
  v.reserve(cusps.size() + 1);
  if (extended) v.push_back(i0);
  v.insert(v.end(), cusps.begin(), cusps.end());
  return v;
}

std::string TWord::to_string() const {
  std::string s;
  for (auto t : flat()) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('0' + t);
  }
  return s;
}

TWord operator+(const TWord& a, const TWord& b) {
  if (a.extended != b.extended || a.cusps.size() != b.cusps.size())
    throw Error(ErrorCode::LengthMismatch, "adding words of different shape");
  TWord r = a;
  r.i0 = add3(a.i0, b.i0);
  for (std::size_t i = 0; i < r.cusps.size(); ++i) r.cusps[i] = add3(a.cusps[i], b.cusps[i]);
  return r;
}

TWord operator*(Trit s, const TWord& w) {
  TWord r = w;
  r.i0 = mul3(s, w.i0);
  for (auto& x : r.cusps) x = mul3(s, x);
  return r;
}

// ---------------------------------------------------------------------------

std::size_t BlockLayout::length() const noexcept {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  return n;
}

std::size_t BlockLayout::offset(std::size_t block) const noexcept {
  std::size_t n = 0;
  for (std::size_t b = 0; b < block; ++b) n += sizes[b];
  return n;
}

std::size_t BlockLayout::block_of(unsigned i, unsigned j) const {
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (pairs[b].first == i && pairs[b].second == j) return b;
  throw Error(ErrorCode::PartitionMismatch, "no block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

BlockLayout BlockLayout::from_counts(const CuspCounts& counts) {
  BlockLayout l;
  for (const auto& pc : counts.pairs) {
    l.pairs.emplace_back(pc.i, pc.j);
    l.sizes.push_back(pc.n);
  }
  return l;
}

std::vector<TWord> words_for_layout(const std::vector<unsigned>& degrees, const BlockLayout& layout) {
  std::vector<TWord> out;
  for (unsigned i = 0; i < degrees.size(); ++i) {
    TWord w;
    w.extended = true;
    w.i0 = static_cast<Trit>(degrees[i] % 3);
    for (std::size_t b = 0; b < layout.pairs.size(); ++b) {
      const auto [x, y] = layout.pairs[b];
      const Trit v = x == i ? 1 : y == i ? 2 : 0;
      w.cusps.insert(w.cusps.end(), layout.sizes[b], v);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<TWord> words_for_type(const PartitionType& parts, unsigned d) {
  return words_for_layout(parts.parts, BlockLayout::from_counts(count_direct(d, parts)));
}

TCode code_span(const BlockLayout& layout, bool extended, const std::vector<TWord>& gens) {
  for (const auto& g : gens)
    if (g.extended != extended || g.cusps.size() != layout.length())
      throw Error(ErrorCode::LengthMismatch, "generator of length " + std::to_string(g.cusps.size()) +
                                                 " in a code of length " + std::to_string(layout.length()));
  return TCode{layout, extended, gens};
}

TCode extended_code(const PartitionType& parts, unsigned d) {
  const auto layout = BlockLayout::from_counts(count_direct(d, parts));
  return code_span(layout, true, words_for_layout(parts.parts, layout));
}

std::vector<TWord> TCode::basis() const {
  std::vector<TWord> out;
  for (const auto& r : rref3(flat_rows(generators))) out.push_back(from_flat(r, extended));
  return out;
}

std::size_t TCode::dimension() const { return rref3(flat_rows(generators)).size(); }

bool TCode::contains(const TWord& w) const {
  if (w.extended != extended || w.cusps.size() != layout.length()) return false;
  auto v = w.flat();
  for (const auto& row : rref3(flat_rows(generators))) {
    const auto pivot = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Trit t) { return t; }) - row.begin());
    const Trit f = neg3(v[pivot]);
    if (f == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = add3(v[c], mul3(f, row[c]));
  }
  return std::all_of(v.begin(), v.end(), [](Trit t) { return t == 0; });
}

namespace {

// Calls fn on every member word of the span of `basis`.
template <class Fn>
void for_each_member(const std::vector<TWord>& basis, const TWord& zero, Fn&& fn) {
  if (basis.size() > 16) throw Error(ErrorCode::TooLarge, "dimension " + std::to_string(basis.size()) + " > 16");
  std::vector<Trit> digit(basis.size(), 0);
  TWord cur = zero;
  fn(cur);
  for (;;) {
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      cur = cur + basis[k];
      if (++digit[k] < 3) break;
      digit[k] = 0;
    }
    if (k == basis.size()) return;
    fn(cur);
  }
}

TWord zero_word(const TCode& c) {
  TWord z;
  z.extended = c.extended;
  z.cusps.assign(c.layout.length(), 0);
  return z;
}

}  // namespace

std::vector<TWord> TCode::members() const {
  std::vector<TWord> out;
  for_each_member(basis(), zero_word(*this), [&](const TWord& w) { out.push_back(w); });
  return out;
}

std::string TCode::matrix_text() const {
  std::ostringstream os;
  os << "blocks:";
  for (std::size_t b = 0; b < layout.pairs.size(); ++b)
    os << ' ' << layout.pairs[b].first + 1 << layout.pairs[b].second + 1 << ':' << layout.sizes[b];
  os << (extended ? " (i0 first)" : "") << '\n';
  for (const auto& g : generators) os << g.to_string() << '\n';
  return os.str();
}

TCode proper_subcode(const TCode& e) {
  if (!e.extended) throw Error(ErrorCode::NotExtended, "proper subcode of a proper code");
  std::vector<TWord> gens;
  for (const auto& row : rref3(flat_rows(e.generators))) {
    if (row[0] != 0) continue;
    gens.push_back(from_flat(std::vector<Trit>(row.begin() + 1, row.end()), false));
  }
  return TCode{e.layout, false, gens};
}

std::map<std::size_t, std::uint64_t> weight_enumerator(const TCode& c) {
  std::map<std::size_t, std::uint64_t> out;
  for_each_member(c.basis(), zero_word(c), [&](const TWord& w) { ++out[w.weight()]; });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> half_swap_pairing(const BlockLayout& layout) {
  std::vector<std::size_t> pi(layout.length());
  std::size_t off = 0;
  for (auto n : layout.sizes) {
    if (n % 2) throw Error(ErrorCode::BadPairing, "block of odd size " + std::to_string(n));
    for (std::size_t t = 0; t < n / 2; ++t) {
      pi[off + t] = off + t + n / 2;
      pi[off + t + n / 2] = off + t;
    }
    off += n;
  }
  return pi;
}

InvolutionSplit involution_split(const TCode& c, const std::vector<std::size_t>& pairing) {
  const std::size_t n = c.layout.length();
  if (pairing.size() != n) throw Error(ErrorCode::BadPairing, "pairing has wrong length");
  std::vector<std::size_t> block(n);
  for (std::size_t b = 0, off = 0; b < c.layout.sizes.size(); off += c.layout.sizes[b], ++b)
    for (std::size_t t = 0; t < c.layout.sizes[b]; ++t) block[off + t] = b;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = pairing[x];
    if (y >= n || y == x || pairing[y] != x) throw Error(ErrorCode::BadPairing, "not a fixed-point-free involution");
    if (block[x] != block[y]) throw Error(ErrorCode::BadPairing, "pairing mixes blocks");
  }
  auto apply = [&](const TWord& w) {
    TWord r = w;
    for (std::size_t x = 0; x < n; ++x) r.cusps[pairing[x]] = w.cusps[x];
    return r;
  };
  InvolutionSplit out{TCode{c.layout, c.extended, {}}, TCode{c.layout, c.extended, {}}, false};
  for (const auto& g : c.generators) {
    const TWord ig = apply(g);
    if (!c.contains(ig)) throw Error(ErrorCode::BadPairing, "code is not invariant under the pairing");
    out.plus.generators.push_back(g + ig);
    out.minus.generators.push_back(g + 2 * ig);
  }
  TCode both{c.layout, c.extended, out.plus.generators};
  both.generators.insert(both.generators.end(), out.minus.generators.begin(), out.minus.generators.end());
  const auto dp = out.plus.dimension(), dm = out.minus.dimension();
  out.direct_sum = dp + dm == c.dimension() && both.dimension() == dp + dm;
  return out;
}

TCode sigma_action(const TCode& c, const PartitionType& parts, const std::vector<unsigned>& sigma) {
  const std::size_t k = parts.size();
  if (sigma.size() != k) throw Error(ErrorCode::PartitionMismatch, "permutation size differs from number of parts");
  std::vector<bool> seen(k, false);
  for (unsigned i = 0; i < k; ++i) {
    if (sigma[i] >= k || seen[sigma[i]]) throw Error(ErrorCode::PartitionMismatch, "not a permutation");
    seen[sigma[i]] = true;
    if (parts.parts[i] != parts.parts[sigma[i]])
      throw Error(ErrorCode::DegreeMismatchUnderPermutation,
                  "part " + std::to_string(i + 1) + " and its image have different degrees");
  }
  TCode out{c.layout, c.extended, {}};
  for (const auto& g : c.generators) {
    TWord w = g;
    for (std::size_t b = 0; b < c.layout.pairs.size(); ++b) {
      const auto [i, j] = c.layout.pairs[b];
      unsigned a = sigma[i], bb = sigma[j];
      const bool flip = a > bb;
      if (flip) std::swap(a, bb);
      const std::size_t tb = c.layout.block_of(a, bb);
      const std::size_t src = c.layout.offset(b), dst = c.layout.offset(tb);
      for (std::size_t t = 0; t < c.layout.sizes[b]; ++t)
        w.cusps[dst + t] = flip ? neg3(g.cusps[src + t]) : g.cusps[src + t];
    }
    out.generators.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Refinement {
  unsigned split = 0;         // coarse part that splits
  unsigned a = 0, b = 0;      // fine parts it splits into
  std::vector<unsigned> map;  // coarse index -> fine index (split part -> a)
};

bool find_refinement(const PartitionType& coarse, const PartitionType& fine, Refinement& out) {
  const auto& C = coarse.parts;
  const auto& F = fine.parts;
  if (F.size() != C.size() + 1) return false;
  for (unsigned m = 0; m < C.size(); ++m)
    for (unsigned a = 0; a < F.size(); ++a)
      for (unsigned b = a + 1; b < F.size(); ++b) {
        if (F[a] + F[b] != C[m]) continue;
        std::vector<bool> used(F.size(), false);
        used[a] = used[b] = true;
        std::vector<unsigned> map(C.size());
        bool ok = true;
        for (unsigned i = 0; i < C.size() && ok; ++i) {
          if (i == m) {
            map[i] = a;
            continue;
          }
          ok = false;
          for (unsigned f = 0; f < F.size(); ++f)
            if (!used[f] && F[f] == C[i]) {
              used[f] = true;
              map[i] = f;
              ok = true;
              break;
            }
        }
        if (ok) {
          out = {m, a, b, map};
          return true;
        }
      }
  return false;
}

}  // namespace

RefinementCheck refine_embed(const PartitionType& coarse, const PartitionType& fine, unsigned d) {
  Refinement ref;
  if (!find_refinement(coarse, fine, ref))
    throw Error(ErrorCode::NotASubPartition, fine.to_string() + " does not refine " + coarse.to_string());
  const TCode cc = extended_code(coarse, d);
  const TCode fc = extended_code(fine, d);
  RefinementCheck out;
  out.coarse = coarse;
  out.fine = fine;
  out.coarse_dim = cc.dimension();
  out.fine_dim = fc.dimension();

  TCode image{fc.layout, true, {}};
  for (const auto& g : cc.generators) {
    TWord w;
    w.extended = true;
    w.i0 = g.i0;
    w.cusps.assign(fc.layout.length(), 0);
    for (std::size_t blk = 0; blk < cc.layout.pairs.size(); ++blk) {
      const auto [x, y] = cc.layout.pairs[blk];
      const Trit v = g.cusps[cc.layout.offset(blk)];
      if (v == 0) continue;
      std::vector<std::pair<unsigned, unsigned>> targets;
      if (x == ref.split) {
        targets = {{ref.a, ref.map[y]}, {ref.b, ref.map[y]}};
      } else if (y == ref.split) {
        targets = {{ref.map[x], ref.a}, {ref.map[x], ref.b}};
      } else {
        targets = {{ref.map[x], ref.map[y]}};
      }
      for (auto [X, Y] : targets) {
        const bool flip = X > Y;
        const std::size_t tb = fc.layout.block_of(std::min(X, Y), std::max(X, Y));
        const std::size_t off = fc.layout.offset(tb);
        for (std::size_t t = 0; t < fc.layout.sizes[tb]; ++t) w.cusps[off + t] = flip ? neg3(v) : v;
      }
    }
    image.generators.push_back(std::move(w));
  }
  out.image_dim = image.dimension();
  out.image_in_fine = std::all_of(image.generators.begin(), image.generators.end(),
                                  [&](const TWord& w) { return fc.contains(w); });
  out.ok = out.image_in_fine && out.image_dim == out.coarse_dim && out.fine_dim > out.coarse_dim;
  return out;
}

std::string LatticeReport::to_text() const {
  std::ostringstream os;
  for (const auto& [t, dim] : dims) os << "type " << t.label() << " dim " << dim << '\n';
  for (const auto& a : arrows)
    os << "arrow " << a.coarse.label() << " -> " << a.fine.label() << ": dims " << a.coarse_dim << " -> " << a.fine_dim
       << ", image dim " << a.image_dim << ", subcode " << (a.image_in_fine ? "yes" : "no") << ' '
       << (a.ok ? "ok" : "FAIL") << '\n';
  os << "lattice: " << (ok ? "PASS" : "FAIL") << '\n';
  return os.str();
}

LatticeReport sextic_lattice() {
  static const char* const types[] = {"3,3", "1,5", "2,4", "1,2,3", "1,1,4", "2,2,2", "1,1,1,3", "1,1,2,2", "1,1,1,1,2", "1,1,1,1,1,1"};
  static const std::pair<const char*, const char*> arrows[] = {
      {"3,3", "1,2,3"},       {"1,5", "1,2,3"},       {"1,5", "1,1,4"},         {"2,4", "1,2,3"},
      {"2,4", "1,1,4"},       {"2,4", "2,2,2"},       {"1,2,3", "1,1,1,3"},     {"1,2,3", "1,1,2,2"},
      {"1,1,4", "1,1,1,3"},   {"1,1,4", "1,1,2,2"},   {"2,2,2", "1,1,2,2"},     {"1,1,1,3", "1,1,1,1,2"},
      {"1,1,2,2", "1,1,1,1,2"}, {"1,1,1,1,2", "1,1,1,1,1,1"},
  };
  LatticeReport rep;
  rep.ok = true;
  for (const char* t : types) {
    const auto pt = PartitionType::parse(t);
    rep.dims.emplace_back(pt, extended_code(pt, 6).dimension());
  }
  for (auto [c, f] : arrows) {
    rep.arrows.push_back(refine_embed(PartitionType::parse(c), PartitionType::parse(f), 6));
    rep.ok = rep.ok && rep.arrows.back().ok;
  }
  return rep;
}

std::string Cusps27Report::to_text() const {
  std::ostringstream os;
  os << "proper code dim " << proper.dimension() << " length " << proper.layout.length() << '\n';
  for (std::size_t i = 0; i < listed.size(); ++i)
    os << "listed w" << i + 1 << " weight " << listed[i].weight() << (listed_are_members ? " member" : "") << '\n';
  os << "w1+w2 weight " << sum.weight() << '\n';
  os << "weights:";
  for (const auto& [w, n] : enumerator) os << ' ' << w << ':' << n;
  os << '\n';
  return os.str();
}

Cusps27Report cusps27() {
  const CuspCounts counts = count_residual({1, 1, 1}, 3);
  const auto layout = BlockLayout::from_counts(counts);
  const TCode ext = code_span(layout, true, words_for_layout({3, 3, 3}, layout));
  Cusps27Report rep;
  rep.proper = proper_subcode(ext);
  auto block_word = [&](std::initializer_list<Trit> vals) {
    TWord w;
    std::size_t b = 0;
    for (auto v : vals) w.cusps.insert(w.cusps.end(), layout.sizes[b++], v);
    return w;
  };
  rep.listed = {block_word({0, 1, 1}), block_word({2, 0, 1})};
  rep.listed_are_members = rep.proper.contains(rep.listed[0]) && rep.proper.contains(rep.listed[1]);
  rep.sum = rep.listed[0] + rep.listed[1];
  rep.enumerator = weight_enumerator(rep.proper);
  return rep;
}

}  // namespace cuspcodes
