#include "swctl/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace swctl {

std::size_t exact_rank(const IntMatrix &input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(m(pivot, j), m(rank, j));

    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev_pivot = m(rank, c);
    ++rank;
  }
  return rank;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector multiply(const IntMatrix &a, std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("multiply: vector length differs from column count");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0)
        out[i] += a(i, k) * x[k];
  return out;
}

IntMatrix hconcat(std::span<const IntMatrix> blocks) {
  if (blocks.empty())
    return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const IntMatrix &b : blocks) {
    if (b.rows() != rows)
      throw std::invalid_argument("hconcat: row counts differ");
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const IntMatrix &b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

IntVector SubspaceBasis::reduce(std::span<const Integer> v) const {
  if (v.size() != dimension_)
    throw std::invalid_argument("SubspaceBasis: vector length differs from dimension");
  IntVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(w[p]) == 0)
      continue;
    const IntVector &b = basis_[k];
    const Integer scale_w = b[p];
    const Integer scale_b = w[p];
    for (std::size_t i = 0; i < dimension_; ++i)
      w[i] = scale_w * w[i] - scale_b * b[i];
    Integer content = 0;
    for (const Integer &x : w)
      content = gcd(content, x);
    if (sgn(content) != 0 && content != 1)
      for (Integer &x : w)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return w;
}

IntVector SubspaceBasis::insert(std::span<const Integer> v) {
  IntVector w = reduce(v);
  auto nz = std::find_if(w.begin(), w.end(), [](const Integer &x) { return sgn(x) != 0; });
  if (nz == w.end())
    return {};
  pivots_.push_back(static_cast<std::size_t>(nz - w.begin()));
  basis_.push_back(w);
  return w;
}

bool SubspaceBasis::contains(std::span<const Integer> v) const {
  IntVector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Integer &x) { return sgn(x) == 0; });
}

} // namespace swctl
