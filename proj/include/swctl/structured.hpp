#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "swctl/graph.hpp"
#include "swctl/matrix.hpp"

namespace swctl {

/// Zero/free pattern of a pair (A, B): A is n x n, B is n x r.
struct PatternPair {
  Pattern a;
  Pattern b;

  std::size_t states() const { return a.rows(); }
  std::size_t inputs() const { return b.cols(); }

  bool operator==(const PatternPair &) const = default;
};

enum class Block : std::uint8_t { A, B };

/// One free parameter and where it sits.
struct FreeEntry {
  int id = 0;
  Block block = Block::A;
  std::size_t row = 0;
  std::size_t col = 0;
};

/**
 * Structured pair extracted from one topology. State q is the q-th follower
 * (ascending agent id), input p is the p-th leader. Parameter ids follow
 * the labelling used for hand-worked examples: diagonal self-weights
 * first, then off-diagonal link weights row by row, then leader weights.
 */
struct StructuredPair {
  PatternPair pattern;
  std::vector<FreeEntry> params;
  VertexSet follower_ids;
  VertexSet leader_ids;

  std::size_t n_followers() const { return pattern.states(); }
  std::size_t n_leaders() const { return pattern.inputs(); }
};

/// A structured pair with integers substituted for every free parameter.
struct NumericPair {
  IntMatrix a;
  IntMatrix b;
  std::vector<Integer> assignment; // indexed by FreeEntry::id

  std::size_t states() const { return a.rows(); }
  std::size_t inputs() const { return b.cols(); }
};

StructuredPair extract_pair(const Topology &topology);

/// Entrywise OR of the patterns; the pattern of (A_1 + ... + A_m, B_1 + ... + B_m).
PatternPair summed_pattern(std::span<const StructuredPair> pairs);

/// Term rank: maximum matching between rows and columns over free entries.
std::size_t g_rank(const Pattern &pattern);

/// [A B] as one pattern.
Pattern concat(const PatternPair &pair);

struct FormIResult {
  bool reducible = false;
  /// States unreachable from every input in the representation digraph.
  std::vector<std::size_t> unreachable;
};

FormIResult form_I(const PatternPair &pair);
inline bool is_form_I(const PatternPair &pair) { return form_I(pair).reducible; }
inline bool is_form_I(const StructuredPair &pair) { return is_form_I(pair.pattern); }

bool is_form_II(const PatternPair &pair);
inline bool is_form_II(const StructuredPair &pair) { return is_form_II(pair.pattern); }

/// Uniform integers in [1, bound] per parameter; deterministic in seed.
NumericPair instantiate(const StructuredPair &pair, std::uint64_t seed, std::uint64_t bound);

/// Same, drawing from a caller-owned engine so several pairs can share one
/// stream of values.
NumericPair instantiate(const StructuredPair &pair, std::mt19937_64 &engine, std::uint64_t bound);

/// Instantiates each pair in order from a single stream seeded once.
std::vector<NumericPair> instantiate_all(std::span<const StructuredPair> pairs, std::uint64_t seed,
                                         std::uint64_t bound);

/// Every free entry set to the given value.
NumericPair instantiate_constant(const StructuredPair &pair, long value);

} // namespace swctl
