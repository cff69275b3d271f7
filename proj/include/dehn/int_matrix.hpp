#pragma once

#include "dehn/integer.hpp"

#include <cstddef>
#include <vector>

namespace dehn {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  std::vector<Integer> row_sums() const;

  /// Copy with row and column k removed.
  IntMatrix minor(std::size_t k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. The 0x0
/// determinant is 1. Throws InvalidArgument for non-square input.
Integer determinant(IntMatrix m);

}  // namespace dehn
