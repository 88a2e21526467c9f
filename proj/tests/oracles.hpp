#pragma once

// Independent reference computations used by the tests. They share no code
// with the library beyond the field element type.

#include <cstdint>
#include <map>
#include <vector>

#include "cuspcodes/ffield.hpp"
#include "cuspcodes/mpoly.hpp"

namespace oracle {

using Row = std::vector<int>;  // entries in {0, 1, 2}

// Rank over F_3 by plain Gaussian elimination.
inline std::size_t f3_rank(std::vector<Row> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] % 3 == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const int inv = m[rank][c] % 3 == 1 ? 1 : 2;
    for (auto& x : m[rank]) x = (x * inv) % 3;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] % 3 == 0) continue;
      const int f = m[r][c] % 3;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % 3 + 3) % 3;
    }
    ++rank;
  }
  return rank;
}

// Every F_3 combination of the rows, as a weight histogram; `skip` leading
// coordinates are ignored when counting weight.
inline std::map<std::size_t, std::uint64_t> f3_weights(const std::vector<Row>& gens, std::size_t skip = 0) {
  std::map<std::size_t, std::uint64_t> out;
  const std::size_t len = gens.empty() ? 0 : gens[0].size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) total *= 3;
  std::map<Row, bool> seen;
  for (std::uint64_t m = 0; m < total; ++m) {
    Row w(len, 0);
    std::uint64_t x = m;
    for (const auto& g : gens) {
      const int a = static_cast<int>(x % 3);
      x /= 3;
      for (std::size_t k = 0; k < len; ++k) w[k] = (w[k] + a * g[k]) % 3;
    }
    if (seen.emplace(w, true).second) {
      std::size_t wt = 0;
      for (std::size_t k = skip; k < len; ++k) wt += w[k] != 0;
      ++out[wt];
    }
  }
  return out;
}

// Determinant over a prime field by elimination on residues.
inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  auto powm = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = static_cast<std::uint64_t>((unsigned __int128)b * b % p))
      if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % p);
    return r;
  };
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = static_cast<std::uint64_t>((unsigned __int128)det * a[c][c] % p);
    const std::uint64_t inv = powm(a[c][c], p - 2);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)a[r][c] * inv % p);
      for (std::size_t k = c; k < n; ++k)
        a[r][k] = (a[r][k] + p - static_cast<std::uint64_t>((unsigned __int128)f * a[c][k] % p)) % p;
    }
  }
  return det;
}

// Resultant of two polynomials (coefficients low to high) via the Sylvester
// matrix.
inline std::uint64_t sylvester_resultant(const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
                                         std::uint64_t p) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, sz = m + n;
  std::vector<std::vector<std::uint64_t>> s(sz, std::vector<std::uint64_t>(sz, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k] % p;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k] % p;
  return det_mod(s, p);
}

// Rational singular points of f by evaluating all partials at every point of
// P^3(F_p), returned as normalized residue tuples.
inline std::vector<std::array<std::uint64_t, 4>> brute_singular(const cuspcodes::MPoly& f) {
  using cuspcodes::Fel;
  const auto& F = f.field();
  const std::uint64_t p = F->characteristic();
  std::array<cuspcodes::MPoly, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = f.diff(i);
  std::vector<std::array<std::uint64_t, 4>> out;
  for (int lead = 0; lead < 4; ++lead) {
    std::uint64_t count = 1;
    for (int k = lead + 1; k < 4; ++k) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
      std::array<std::uint64_t, 4> c{};
      c[lead] = 1;
      std::uint64_t x = m;
      for (int k = lead + 1; k < 4; ++k, x /= p) c[k] = x % p;
      cuspcodes::Point4 pt;
      for (int k = 0; k < 4; ++k) pt[k] = Fel::from_residue(F, c[k]);
      bool sing = f.eval(pt).is_zero();
      for (int i = 0; i < 4 && sing; ++i) sing = d[i].eval(pt).is_zero();
      if (sing) out.push_back(c);
    }
  }
  return out;
}

}  // namespace oracle
