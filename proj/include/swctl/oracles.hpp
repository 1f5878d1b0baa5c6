#pragma once

#include "swctl/structured.hpp"

namespace swctl::oracle {

// Brute-force decision procedures that follow the permutation-based
// definitions literally. Factorial cost; meant for n <= 8.

/// Searches every state permutation P and split p for
///   P A P^-1 = [[A11, 0], [A21, A22]],  P B = [[0], [B22]]
/// with A11 of size p x p, 1 <= p <= n.
bool is_form_I_by_permutation(const PatternPair &pair);

/// Searches every state permutation P and row count k for a leading k-row
/// block of [P A P^-1, P B] with at most k - 1 columns that hold a free entry.
bool is_form_II_by_permutation(const PatternPair &pair);

/// Rank over Q by Gaussian elimination on rationals. Independent of the
/// fraction-free routines used elsewhere.
std::size_t rational_rank(const IntMatrix &m);

} // namespace swctl::oracle
