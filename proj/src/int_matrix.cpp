#include "dehn/int_matrix.hpp"

#include "dehn/error.hpp"

#include <utility>

namespace dehn {

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<Integer> IntMatrix::row_sums() const {
  std::vector<Integer> sums(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

IntMatrix IntMatrix::minor(std::size_t k) const {
  if (k >= rows_ || k >= cols_) throw InvalidArgument("minor index out of range");
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == k) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace dehn
