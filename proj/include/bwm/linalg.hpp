#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace bwm {

template <typename V>
using Matrix = std::vector<std::vector<V>>;

/// In-place reduced row echelon form; returns the pivot columns.
template <typename V>
std::vector<std::size_t> rref(Matrix<V>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const V inv = V(m[row][c]).inverse();
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const V f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

/// Basis of {v : m v = 0}, one vector per free column.
template <typename V>
std::vector<std::vector<V>> nullspace(Matrix<V> m, std::size_t cols, const V& zero, const V& one) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<V>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<V> v(cols, zero);
    v[f] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bwm
