#include "cuspcodes/wedge.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "cuspcodes/error.hpp"
#include "cuspcodes/rng.hpp"

namespace cuspcodes {

namespace {

constexpr std::uint32_t kSpaceSize = 14348907;  // 3^15
constexpr std::uint16_t kMask = 0x7fff;

Trit tadd(Trit a, Trit b) { return static_cast<Trit>((a + b) % 3); }
Trit tmul(Trit a, Trit b) { return static_cast<Trit>((a * b) % 3); }
Trit tneg(Trit a) { return static_cast<Trit>((3 - a) % 3); }

// Bit-sliced vector: p marks coordinates equal to 1, n those equal to 2.
struct Packed {
  std::uint16_t p = 0, n = 0;
  friend bool operator==(const Packed&, const Packed&) = default;
};

inline Packed padd(Packed a, Packed b) {
  const std::uint16_t az = static_cast<std::uint16_t>(~(a.p | a.n));
  const std::uint16_t bz = static_cast<std::uint16_t>(~(b.p | b.n));
  return {static_cast<std::uint16_t>((a.p & bz) | (az & b.p) | (a.n & b.n)),
          static_cast<std::uint16_t>((a.n & bz) | (az & b.n) | (a.p & b.p))};
}
inline Packed pneg(Packed a) { return {a.n, a.p}; }
inline Packed pscale(Trit s, Packed a) { return s == 0 ? Packed{} : (s == 1 ? a : pneg(a)); }
inline unsigned pweight(Packed a) { return static_cast<unsigned>(std::popcount(static_cast<unsigned>(a.p | a.n))); }

Packed pack(const WedgeVec& v) {
  Packed r;
  for (int k = 0; k < kWedgeDim; ++k) {
    if (v[k] == 1) r.p |= static_cast<std::uint16_t>(1u << k);
    if (v[k] == 2) r.n |= static_cast<std::uint16_t>(1u << k);
  }
  return r;
}

WedgeVec unpack(Packed a) {
  WedgeVec v{};
  for (int k = 0; k < kWedgeDim; ++k) {
    if (a.p >> k & 1) v[k] = 1;
    if (a.n >> k & 1) v[k] = 2;
  }
  return v;
}

// Per-permutation lookup tables, split into a low byte and a high 7 bits.
struct PermTable {
  std::array<std::uint16_t, 256> keep_lo, flip_lo;
  std::array<std::uint16_t, 128> keep_hi, flip_hi;

  std::uint16_t keep(std::uint16_t m) const { return keep_lo[m & 0xff] | keep_hi[m >> 8]; }
  std::uint16_t flip(std::uint16_t m) const { return flip_lo[m & 0xff] | flip_hi[m >> 8]; }
  Packed apply(Packed a) const {
    return {static_cast<std::uint16_t>(keep(a.p) | flip(a.n)), static_cast<std::uint16_t>(keep(a.n) | flip(a.p))};
  }
};

struct Tables {
  std::vector<Perm6> perms;  // all 720, lexicographic
  std::vector<PermTable> act;
  std::array<std::size_t, kWedgeDim> transposition_index{};
  std::vector<std::uint32_t> pow3_sum;  // mask -> sum of 3^k over its bits
  std::vector<std::uint32_t> members;   // indices of e ^ U, sorted
  std::vector<Packed> member_vecs;

  std::uint32_t index_of(Packed a) const { return pow3_sum[a.p] + 2 * pow3_sum[a.n]; }
  bool is_member(Packed a) const { return std::binary_search(members.begin(), members.end(), index_of(a)); }
};

std::size_t perm_rank(const Perm6& s, const std::vector<Perm6>& perms) {
  return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), s) - perms.begin());
}

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    Perm6 s{0, 1, 2, 3, 4, 5};
    do t.perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    t.act.resize(t.perms.size());
    for (std::size_t q = 0; q < t.perms.size(); ++q) {
      const Perm6& sg = t.perms[q];
      std::array<std::uint16_t, kWedgeDim> target{};
      std::array<bool, kWedgeDim> flips{};
      for (int j = 1; j < 6; ++j)
        for (int i = 0; i < j; ++i) {
          int a = sg[i], b = sg[j];
          flips[wedge_index(i, j)] = a > b;
          if (a > b) std::swap(a, b);
          target[wedge_index(i, j)] = static_cast<std::uint16_t>(1u << wedge_index(a, b));
        }
      PermTable& pt = t.act[q];
      for (unsigned m = 0; m < 256; ++m) {
        std::uint16_t k = 0, f = 0;
        for (int b = 0; b < 8; ++b)
          if (m >> b & 1) (flips[b] ? f : k) |= target[b];
        pt.keep_lo[m] = k;
        pt.flip_lo[m] = f;
      }
      for (unsigned m = 0; m < 128; ++m) {
        std::uint16_t k = 0, f = 0;
        for (int b = 0; b < 7; ++b)
          if (m >> b & 1) (flips[8 + b] ? f : k) |= target[8 + b];
        pt.keep_hi[m] = k;
        pt.flip_hi[m] = f;
      }
    }
    for (int j = 1; j < 6; ++j)
      for (int i = 0; i < j; ++i) t.transposition_index[wedge_index(i, j)] = perm_rank(transposition(i, j), t.perms);
    t.pow3_sum.resize(1u << kWedgeDim);
    for (std::uint32_t m = 0; m < t.pow3_sum.size(); ++m) {
      std::uint32_t s = 0, p = 1;
      for (int k = 0; k < kWedgeDim; ++k, p *= 3)
        if (m >> k & 1) s += p;
      t.pow3_sum[m] = s;
    }
    for (const WedgeVec& v : e_wedge_U().members()) {
      t.member_vecs.push_back(pack(v));
      t.members.push_back(wedge_to_index(v));
    }
    std::sort(t.members.begin(), t.members.end());
    return t;
  }();
  return t;
}

// Row reduction helper over packed rows with a pivot column each.
struct Reducer {
  std::vector<std::pair<int, WedgeVec>> rows;  // pivot, row with pivot entry 1

  WedgeVec reduce(WedgeVec v) const {
    for (const auto& [piv, row] : rows)
      if (v[piv] != 0) {
        const Trit c = tneg(v[piv]);
        for (int k = 0; k < kWedgeDim; ++k) v[k] = tadd(v[k], tmul(c, row[k]));
      }
    return v;
  }
  bool insert(const WedgeVec& v) {
    WedgeVec r = reduce(v);
    int piv = -1;
    for (int k = 0; k < kWedgeDim && piv < 0; ++k)
      if (r[k] != 0) piv = k;
    if (piv < 0) return false;
    if (r[piv] == 2) r = wedge_scale(2, r);
    // Keep earlier rows reduced against the new pivot.
    for (auto& [p2, row] : rows)
      if (row[piv] != 0) {
        const Trit c = tneg(row[piv]);
        for (int k = 0; k < kWedgeDim; ++k) row[k] = tadd(row[k], tmul(c, r[k]));
      }
    rows.emplace_back(piv, r);
    return true;
  }
  WedgeSubspace finish() const {
    auto sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    WedgeSubspace s;
    for (auto& [p, row] : sorted) s.basis.push_back(row);
    return s;
  }
};

bool bad(Packed w) { return !allowed_weight(pweight(w)); }

// Witness ladder on one packed vector that is not a member of e ^ U.
WitnessStage ladder(Packed v, std::uint64_t seed, unsigned draws) {
  const Tables& t = tables();
  if (!allowed_weight(pweight(v))) return WitnessStage::Weight;

  for (std::size_t q : t.transposition_index)
    if (bad(padd(v, pneg(t.act[q].apply(v))))) return WitnessStage::Transposition;

  // Pair the coordinates 12, 34, 56 with u-words, then compare against the
  // double transpositions (13)(24) and (15)(26), all inside the invariant span.
  const WedgeVec vv = unpack(v);
  const WedgeSubspace w = invariant_span(vv);
  const UWords uw = u_words();
  WedgeVec u{};
  for (int a = 0; a < 6; a += 2) u = wedge_add(u, wedge_scale(vv[wedge_index(a, a + 1)], uw.uij[a][a + 1]));
  std::vector<Packed> bases{v};
  if (w.contains(u)) bases.push_back(pack(wedge_add(vv, u)));
  const std::array<Perm6, 2> doubles{compose(transposition(0, 2), transposition(1, 3)),
                                     compose(transposition(0, 4), transposition(1, 5))};
  for (Packed b : bases)
    for (const Perm6& d : doubles) {
      const Packed img = t.act[perm_rank(d, t.perms)].apply(b);
      if (bad(padd(b, img)) || bad(padd(b, pneg(img)))) return WitnessStage::PairedWords;
    }
  std::vector<Packed> rows;
  for (const WedgeVec& r : w.basis) rows.push_back(pack(r));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (bad(rows[a])) return WitnessStage::PairedWords;
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (bad(padd(rows[a], rows[b])) || bad(padd(rows[a], pneg(rows[b])))) return WitnessStage::PairedWords;
  }

  Rng rng(seed);
  std::uniform_int_distribution<int> trit(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, t.perms.size() - 1);
  for (unsigned k = 0; k < draws; ++k) {
    const Trit a = static_cast<Trit>(trit(rng)), b = static_cast<Trit>(trit(rng)), c = static_cast<Trit>(trit(rng));
    const Packed s = t.act[pick(rng)].apply(v), r = t.act[pick(rng)].apply(v);
    if (bad(padd(padd(pscale(a, v), pscale(b, s)), pscale(c, r)))) return WitnessStage::Random;
  }
  return WitnessStage::Unresolved;
}

struct Tally {
  std::map<WitnessStage, std::uint64_t> by_stage;
  std::map<std::size_t, std::uint64_t> member_weights;
  std::vector<std::uint32_t> unresolved;
  std::uint64_t processed = 0;
};

void classify_into(Tally& tally, Packed v, std::uint32_t idx, std::uint64_t seed, std::uint64_t multiplicity) {
  const Tables& t = tables();
  ++tally.processed;
  WitnessStage st;
  if (allowed_weight(pweight(v)) && t.is_member(v)) {
    st = WitnessStage::Member;
    tally.member_weights[pweight(v)] += multiplicity;
  } else {
    st = ladder(v, derive_seed(seed, {idx}), 200);
  }
  ++tally.by_stage[st];
  if (st == WitnessStage::Unresolved) tally.unresolved.push_back(idx);
}

void scan_range(Tally& tally, std::uint32_t lo, std::uint32_t hi, std::uint64_t seed) {
  if (lo >= hi) return;
  std::array<Trit, kWedgeDim> digit{};
  std::uint32_t x = lo;
  Packed v;
  for (int k = 0; k < kWedgeDim; ++k, x /= 3) {
    digit[k] = static_cast<Trit>(x % 3);
    if (digit[k] == 1) v.p |= static_cast<std::uint16_t>(1u << k);
    if (digit[k] == 2) v.n |= static_cast<std::uint16_t>(1u << k);
  }
  for (std::uint32_t idx = lo;;) {
    classify_into(tally, v, idx, seed, 1);
    if (++idx == hi) break;
    int k = 0;
    while (digit[k] == 2) {
      digit[k] = 0;
      v.n &= static_cast<std::uint16_t>(~(1u << k));
      ++k;
    }
    if (++digit[k] == 1) {
      v.p |= static_cast<std::uint16_t>(1u << k);
    } else {
      v.p &= static_cast<std::uint16_t>(~(1u << k));
      v.n |= static_cast<std::uint16_t>(1u << k);
    }
  }
}

void merge(Tally& into, const Tally& from) {
  into.processed += from.processed;
  for (auto& [k, c] : from.by_stage) into.by_stage[k] += c;
  for (auto& [k, c] : from.member_weights) into.member_weights[k] += c;
  into.unresolved.insert(into.unresolved.end(), from.unresolved.begin(), from.unresolved.end());
}

template <class Job>
std::vector<Tally> run_parallel(unsigned workers, std::size_t jobs, Job job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  std::vector<Tally> out(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back([&, w] { job(out[w], w, workers); });
  job(out[0], 0, workers);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

std::size_t wedge_weight(const WedgeVec& v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Trit x) { return x != 0; }));
}

WedgeVec wedge_add(const WedgeVec& a, const WedgeVec& b) noexcept {
  WedgeVec r{};
  for (int k = 0; k < kWedgeDim; ++k) r[k] = tadd(a[k], b[k]);
  return r;
}

WedgeVec wedge_scale(Trit s, const WedgeVec& v) noexcept {
  WedgeVec r{};
  for (int k = 0; k < kWedgeDim; ++k) r[k] = tmul(s % 3, v[k]);
  return r;
}

std::uint32_t wedge_to_index(const WedgeVec& v) noexcept {
  std::uint32_t idx = 0;
  for (int k = kWedgeDim - 1; k >= 0; --k) idx = idx * 3 + v[k] % 3;
  return idx;
}

WedgeVec wedge_from_index(std::uint32_t idx) noexcept {
  WedgeVec v{};
  for (int k = 0; k < kWedgeDim; ++k, idx /= 3) v[k] = static_cast<Trit>(idx % 3);
  return v;
}

std::string wedge_to_string(const WedgeVec& v) {
  std::string s;
  for (Trit x : v) s += static_cast<char>('0' + x);
  return s;
}

WedgeVec wedge_of(const Vec6& u, const Vec6& v) noexcept {
  WedgeVec r{};
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i) r[wedge_index(i, j)] = tadd(tmul(u[i], v[j]), tneg(tmul(u[j], v[i])));
  return r;
}

WedgeVec wedge_unit(int i, int j) noexcept {
  WedgeVec r{};
  if (i == j) return r;
  r[wedge_index(std::min(i, j), std::max(i, j))] = i < j ? 1 : 2;
  return r;
}

UWords u_words() {
  UWords w{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) w.u[i] = wedge_add(w.u[i], wedge_unit(i, k));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) w.uij[i][j] = wedge_add(w.u[i], wedge_scale(2, w.u[j]));
  return w;
}

bool WedgeSubspace::contains(const WedgeVec& v) const {
  WedgeVec r = v;
  for (const WedgeVec& row : basis) {
    const auto piv = std::find_if(row.begin(), row.end(), [](Trit x) { return x != 0; }) - row.begin();
    if (r[piv] != 0) r = wedge_add(r, wedge_scale(tneg(r[piv]), row));
  }
  return wedge_weight(r) == 0;
}

std::vector<WedgeVec> WedgeSubspace::members() const {
  if (basis.size() > 15) throw Error(ErrorCode::TooLarge, "subspace dimension above 15");
  std::vector<WedgeVec> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) total *= 3;
  out.reserve(total);
  for (std::size_t m = 0; m < total; ++m) {
    WedgeVec v{};
    std::size_t x = m;
    for (const WedgeVec& row : basis) {
      v = wedge_add(v, wedge_scale(static_cast<Trit>(x % 3), row));
      x /= 3;
    }
    out.push_back(v);
  }
  return out;
}

WedgeSubspace WedgeSubspace::span(const std::vector<WedgeVec>& gens) {
  Reducer r;
  for (const WedgeVec& g : gens) r.insert(g);
  return r.finish();
}

WedgeSubspace e_wedge_U() {
  const UWords w = u_words();
  return WedgeSubspace::span({w.uij[0][1], w.uij[0][2], w.uij[0][3], w.uij[0][4]});
}

Perm6 transposition(int i, int j) noexcept {
  Perm6 s{0, 1, 2, 3, 4, 5};
  std::swap(s[i], s[j]);
  return s;
}

Perm6 compose(const Perm6& s, const Perm6& t) noexcept {
  Perm6 r{};
  for (int x = 0; x < 6; ++x) r[x] = s[t[x]];
  return r;
}

WedgeVec sigma_on_wedge(const Perm6& sigma, const WedgeVec& v) noexcept {
  WedgeVec r{};
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i) {
      const Trit c = v[wedge_index(i, j)];
      if (c == 0) continue;
      r = wedge_add(r, wedge_scale(c, wedge_unit(sigma[i], sigma[j])));
    }
  return r;
}

std::optional<WedgeVec> transposition_witness(const WedgeVec& v) {
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i) {
      if (v[wedge_index(i, j)] != 0) continue;
      const WedgeVec d = wedge_add(v, wedge_scale(2, sigma_on_wedge(transposition(i, j), v)));
      if (!allowed_weight(wedge_weight(d))) return d;
    }
  return std::nullopt;
}

WedgeSubspace invariant_span(const WedgeVec& v) {
  Reducer r;
  std::vector<WedgeVec> queue;
  if (r.insert(v)) queue.push_back(v);
  // Adjacent transpositions generate S_6.
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int a = 0; a < 5; ++a) {
      const WedgeVec img = sigma_on_wedge(transposition(a, a + 1), queue[q]);
      if (r.insert(img)) queue.push_back(img);
    }
  return r.finish();
}

const char* stage_name(WitnessStage s) {
  switch (s) {
    case WitnessStage::Member: return "member of e^U";
    case WitnessStage::Weight: return "weight";
    case WitnessStage::Transposition: return "transposition difference";
    case WitnessStage::PairedWords: return "paired u-word step";
    case WitnessStage::Random: return "random combination";
    case WitnessStage::Unresolved: return "unresolved";
  }
  return "?";
}

WitnessStage resolve_vector(const WedgeVec& v, std::uint64_t seed, unsigned random_draws) {
  const Packed p = pack(v);
  if (allowed_weight(pweight(p)) && tables().is_member(p)) return WitnessStage::Member;
  return ladder(p, seed, random_draws);
}

bool WedgeVerifyReport::passed() const {
  std::size_t members = 0;
  for (auto& [w, c] : member_weights) {
    if (!allowed_weight(w)) return false;
    members += c;
  }
  return unresolved.empty() && covered == kSpaceSize && members == 81;
}

std::string WedgeVerifyReport::to_text() const {
  std::ostringstream os;
  os << "wedge verification: mode " << (mode == VerifyMode::Exhaustive ? "exhaustive" : "orbit-reduced") << ", seed "
     << seed << ", workers " << workers << "\n";
  os << "examined: " << processed << (mode == VerifyMode::OrbitReduced ? " orbit representatives" : " vectors")
     << ", covering " << covered << " of " << kSpaceSize << "\n";
  std::uint64_t members = 0;
  for (auto& [w, c] : member_weights) members += c;
  os << "e^U members: " << members << " (weights";
  for (auto& [w, c] : member_weights) os << " " << w << ":" << c;
  os << ")\n";
  for (WitnessStage s : {WitnessStage::Member, WitnessStage::Weight, WitnessStage::Transposition,
                         WitnessStage::PairedWords, WitnessStage::Random}) {
    auto it = by_stage.find(s);
    os << "stage " << stage_name(s) << ": " << (it == by_stage.end() ? 0 : it->second) << "\n";
  }
  os << "UNRESOLVED: " << unresolved.size() << "\n";
  for (const WedgeVec& v : unresolved) os << "  " << wedge_to_string(v) << "\n";
  os << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

WedgeVerifyReport wedge_verify(VerifyMode mode, unsigned workers, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Tables& t = tables();
  WedgeVerifyReport rep;
  rep.mode = mode;
  rep.seed = seed;
  workers = std::max(1u, workers);
  rep.workers = workers;
  Tally total;

  if (mode == VerifyMode::Exhaustive) {
    auto parts = run_parallel(workers, kSpaceSize, [&](Tally& tally, unsigned w, unsigned n) {
      const std::uint64_t lo = std::uint64_t(kSpaceSize) * w / n, hi = std::uint64_t(kSpaceSize) * (w + 1) / n;
      scan_range(tally, static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi), seed);
    });
    for (auto& p : parts) merge(total, p);
    rep.covered = total.processed;
  } else {
    // Representatives are the smallest index of each orbit under S_6 x {1, -1}.
    std::vector<std::uint64_t> seen((kSpaceSize + 63) / 64);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> reps;  // index, orbit size
    auto test_and_set = [&](std::uint32_t i) {
      const std::uint64_t bit = std::uint64_t(1) << (i & 63);
      const bool was = seen[i >> 6] & bit;
      seen[i >> 6] |= bit;
      return !was;
    };
    for (std::uint32_t idx = 0; idx < kSpaceSize; ++idx) {
      if (seen[idx >> 6] >> (idx & 63) & 1) continue;
      const Packed v = pack(wedge_from_index(idx));
      std::uint64_t size = 0;
      for (const PermTable& pt : t.act) {
        const Packed img = pt.apply(v);
        size += test_and_set(t.index_of(img));
        size += test_and_set(t.index_of(pneg(img)));
      }
      reps.emplace_back(idx, size);
    }
    auto parts = run_parallel(workers, reps.size(), [&](Tally& tally, unsigned w, unsigned n) {
      for (std::size_t k = w; k < reps.size(); k += n)
        classify_into(tally, pack(wedge_from_index(reps[k].first)), reps[k].first, seed, reps[k].second);
    });
    for (auto& p : parts) merge(total, p);
    for (auto& r : reps) rep.covered += r.second;
  }

  rep.processed = total.processed;
  rep.by_stage = total.by_stage;
  rep.member_weights = total.member_weights;
  std::sort(total.unresolved.begin(), total.unresolved.end());
  for (std::uint32_t idx : total.unresolved) rep.unresolved.push_back(wedge_from_index(idx));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string BPlusReport::to_text() const {
  std::ostringstream os;
  os << "doubled e^U: dimension " << doubled_dim << ", weights";
  for (auto& [w, c] : doubled_weights) os << " " << w << ":" << c;
  os << "\n";
  os << "proper code of 1,1,1,1,1,1: dimension " << proper_dim << ", extended " << extended_dim << "\n";
  os << "doubled e^U inside proper code: " << (doubled_in_proper ? "yes" : "no") << ", equal: "
     << (spans_equal ? "yes" : "no") << "\n";
  os << "involution split: plus " << plus_dim << ", minus " << minus_dim << "\n";
  os << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

BPlusReport bplus_bminus_check() {
  BPlusReport rep;
  const PartitionType six = PartitionType::parse("1,1,1,1,1,1");
  const TCode ext = extended_code(six, 6);
  const TCode proper = proper_subcode(ext);
  rep.extended_dim = ext.dimension();
  rep.proper_dim = proper.dimension();

  // Blocks of 1^6 follow the same pair order as the wedge coordinates and
  // hold two cusps each, so (w, w) doubles every coordinate.
  const BlockLayout& layout = proper.layout;
  auto doubled = [&](const WedgeVec& w) {
    TWord t;
    t.cusps.assign(layout.length(), 0);
    for (std::size_t b = 0; b < layout.pairs.size(); ++b) {
      const auto [i, j] = layout.pairs[b];
      const Trit c = w[wedge_index(static_cast<int>(i), static_cast<int>(j))];
      for (std::size_t k = 0; k < layout.sizes[b]; ++k) t.cusps[layout.offset(b) + k] = c;
    }
    return t;
  };
  const WedgeSubspace eu = e_wedge_U();
  std::vector<TWord> gens;
  for (const WedgeVec& b : eu.basis) gens.push_back(doubled(b));
  const TCode dcode = code_span(layout, false, gens);
  rep.doubled_dim = dcode.dimension();
  rep.doubled_weights = weight_enumerator(dcode);
  rep.doubled_in_proper = std::all_of(gens.begin(), gens.end(), [&](const TWord& g) { return proper.contains(g); });
  rep.spans_equal = rep.doubled_in_proper && rep.doubled_dim == rep.proper_dim;
  const InvolutionSplit split = involution_split(proper, half_swap_pairing(layout));
  rep.plus_dim = split.plus.dimension();
  rep.minus_dim = split.minus.dimension();
  rep.ok = rep.spans_equal && rep.minus_dim == 0 && rep.plus_dim == rep.proper_dim && rep.extended_dim == 5 &&
           rep.proper_dim == 4;
  return rep;
}

}  // namespace cuspcodes
