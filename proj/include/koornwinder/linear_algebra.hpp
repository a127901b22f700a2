// Dense Gaussian elimination over an exact field. Used by the eigenvector
// oracle and the basis check only.

#ifndef KOORNWINDER_LINEAR_ALGEBRA_HPP
#define KOORNWINDER_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <vector>

namespace kw {

template <class K>
using Matrix = std::vector<std::vector<K>>;

namespace detail {

template <class K>
std::size_t weight(const K& x) {
  if constexpr (requires { x.size(); })
    return x.size();
  else
    return 1;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<std::size_t> row_reduce(Matrix<K>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // Sparsest nonzero pivot keeps symbolic entries small.
    std::size_t best = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      if (best == m.size() || weight(m[r][col]) < weight(m[best][col])) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    const K inv = K(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c)
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const K factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class K>
std::size_t rank(Matrix<K> m) {
  if (m.empty()) return 0;
  return detail::row_reduce(m, m[0].size()).size();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, std::size_t cols) {
  auto pivots = detail::row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kw

#endif
