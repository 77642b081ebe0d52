#pragma once

// Dense Gaussian elimination over a field.

#include <cstddef>
#include <vector>

#include "spectra/groebner/field.hpp"

namespace spectra::gb {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Reduces m in place to reduced row echelon form, drops zero rows, and
// returns the pivot column of each remaining row.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const K inv = K(1) / m[row][c];
    for (std::size_t j = c; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][c])) continue;
      const K f = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m[row][j])) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0}, for an r x cols matrix.
template <class K>
Matrix<K> kernel(Matrix<K> m, std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace spectra::gb
