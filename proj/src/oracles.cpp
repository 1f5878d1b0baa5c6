#include "swctl/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace swctl::oracle {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return perm;
}

// Row i of the permuted pair is original state perm[i]; (P A P^-1)(i, j) = A(perm[i], perm[j]).
PatternPair permuted(const PatternPair &pair, const std::vector<std::size_t> &perm) {
  const std::size_t n = pair.states(), r = pair.inputs();
  PatternPair out{Pattern(n, n, 0), Pattern(n, r, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      out.a(i, j) = pair.a(perm[i], perm[j]);
    for (std::size_t j = 0; j < r; ++j)
      out.b(i, j) = pair.b(perm[i], j);
  }
  return out;
}

bool has_form_I_split(const PatternPair &pp, std::size_t p) {
  const std::size_t n = pp.states();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = p; j < n; ++j)
      if (pp.a(i, j))
        return false;
    for (std::size_t j = 0; j < pp.inputs(); ++j)
      if (pp.b(i, j))
        return false;
  }
  return true;
}

bool has_form_II_block(const PatternPair &pp, std::size_t k) {
  const std::size_t n = pp.states();
  std::size_t nonzero_cols = 0;
  for (std::size_t j = 0; j < n + pp.inputs(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const bool free = j < n ? pp.a(i, j) != 0 : pp.b(i, j - n) != 0;
      if (free) {
        ++nonzero_cols;
        break;
      }
    }
  }
  return nonzero_cols <= k - 1;
}

} // namespace

bool is_form_I_by_permutation(const PatternPair &pair) {
  const std::size_t n = pair.states();
  auto perm = identity(n);
  do {
    const PatternPair pp = permuted(pair, perm);
    for (std::size_t p = 1; p <= n; ++p)
      if (has_form_I_split(pp, p))
        return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_form_II_by_permutation(const PatternPair &pair) {
  const std::size_t n = pair.states();
  auto perm = identity(n);
  do {
    const PatternPair pp = permuted(pair, perm);
    for (std::size_t k = 1; k <= n; ++k)
      if (has_form_II_block(pp, k))
        return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t rational_rank(const IntMatrix &input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  Matrix<mpq_class> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = mpq_class(input(i, j));

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(m(i, c)) == 0)
        continue;
      const mpq_class factor = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

} // namespace swctl::oracle
