#pragma once

#include <cstddef>
#include <vector>

#include "clines/field.hpp"

namespace clines {

template <FieldElement C>
using Vec = std::vector<C>;

/// Row-reduced echelon form, in place. Pivots are taken at the smallest
/// column index, from the first eligible row. Returns the pivot columns.
template <FieldElement C>
std::vector<std::size_t> row_reduce(std::vector<Vec<C>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t k = r; k < rows.size(); ++k)
      if (!rows[k][c].is_zero()) {
        found = k;
        break;
      }
    if (found == rows.size()) continue;
    std::swap(rows[r], rows[found]);
    const C inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const C f = rows[k][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <FieldElement C>
std::size_t matrix_rank(std::vector<Vec<C>> rows, std::size_t ncols) {
  return row_reduce(rows, ncols).size();
}

/// Basis of {v : rows * v = 0}, one vector per free column, in column order.
template <FieldElement C>
std::vector<Vec<C>> kernel_basis(std::vector<Vec<C>> rows, std::size_t ncols, const FieldSpec& field) {
  const auto pivots = row_reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<C>> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<C> v(ncols, C(field, 0));
    v[free] = C(field, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    out.push_back(std::move(v));
  }
  return out;
}

template <FieldElement C>
bool linearly_independent(const std::vector<Vec<C>>& vectors, std::size_t dim) {
  return matrix_rank(vectors, dim) == vectors.size();
}

}  // namespace clines
