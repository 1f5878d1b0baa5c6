#pragma once

#include <span>

#include "swctl/matrix.hpp"

namespace swctl {

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix &m);

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
IntVector multiply(const IntMatrix &a, std::span<const Integer> x);

/// Horizontal concatenation; all blocks must share the row count.
IntMatrix hconcat(std::span<const IntMatrix> blocks);

/**
 * Incrementally grown basis of a subspace of Q^n, kept integral and
 * primitive. Each stored vector is zero at the pivot columns of every
 * vector stored before it, so a candidate is reduced against the basis
 * in insertion order.
 */
class SubspaceBasis {
public:
  explicit SubspaceBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds the reduced remainder of v when v is outside the span. Returns
  /// the stored vector, or an empty vector if nothing was added.
  IntVector insert(std::span<const Integer> v);

  bool contains(std::span<const Integer> v) const;

  std::size_t rank() const { return basis_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool full() const { return basis_.size() == dimension_; }

private:
  IntVector reduce(std::span<const Integer> v) const;

  std::size_t dimension_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace swctl
