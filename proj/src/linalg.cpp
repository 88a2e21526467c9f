#include "cuspcodes/linalg.hpp"

namespace cuspcodes {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(FelMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Fel inv = m[row][col].inv();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Fel factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(FelMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  return rref(m, cols).size();
}

std::vector<std::vector<Fel>> nullspace(FelMatrix m, std::size_t cols, const Field& f) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fel>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fel> v(cols, Fel::zero(f));
    v[free] = Fel::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FelMatrix> matrix_inverse(const FelMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return FelMatrix{};
  const Field& f = m[0][0].field();
  FelMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Fel::one(f) : Fel::zero(f));
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  FelMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return inv;
}

}  // namespace cuspcodes
