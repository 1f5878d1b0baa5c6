#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace swctl {

/// Dense row-major matrix.
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T &operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T &operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out[r] = (*this)(r, c);
    return out;
  }

  bool operator==(const Matrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Zero/free support of a structured matrix: nonzero means free parameter.
using Pattern = Matrix<std::uint8_t>;

using Integer = mpz_class;
using IntMatrix = Matrix<Integer>;
using IntVector = std::vector<Integer>;

} // namespace swctl
