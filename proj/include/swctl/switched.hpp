#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "swctl/graph.hpp"
#include "swctl/structured.hpp"

namespace swctl {

class DimensionMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The explicit switched controllability matrix would exceed the column cap.
class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 100000;
inline constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 31;
inline constexpr unsigned kDefaultTrials = 5;

/**
 * Dimension of the smallest subspace containing every column of every B_j
 * and invariant under every A_i. This is the rank of the switched
 * controllability matrix [B_j, A_i B_j, A_i A_k B_j, ...] over words of
 * length at most n - 1, computed as a fixpoint without enumerating words.
 */
std::size_t reachable_subspace_rank(std::span<const NumericPair> pairs);

/// Number of columns enumerate_switched_matrix would produce.
std::size_t switched_matrix_columns(std::size_t states, std::size_t inputs, std::size_t subsystems);

/**
 * Explicit switched controllability matrix. Columns are ordered by word
 * length, then lexicographically by the application sequence
 * (j, i_1, ..., i_k) of the column A_{i_k} ... A_{i_1} B_j, then by input
 * column. For two subsystems and three states this gives
 * B1, B2, A1B1, A2B1, A1B2, A2B2, A1A1B1, A2A1B1, A1A2B1, ...
 */
IntMatrix enumerate_switched_matrix(std::span<const NumericPair> pairs,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Classical [B, AB, ..., A^{n-1}B].
IntMatrix kalman_matrix(const NumericPair &pair);
std::size_t kalman_rank(const NumericPair &pair);

enum class Criterion {
  FixedConnected,                 ///< one snapshot, one leader: graph connected
  FixedLeaderFollowerConnected,   ///< one snapshot, several leaders
  UnionConnected,                 ///< switched, one leader: union graph connected
  UnionLeaderFollowerConnected,   ///< switched, several leaders
};

std::string_view criterion_name(Criterion c);

struct Certificate {
  std::uint64_t seed = 0;   ///< seed of the successful (or last) trial
  std::uint64_t bound = 0;
  unsigned trial = 0;       ///< zero-based index of that trial
  std::size_t achieved_rank = 0;
  std::size_t required_rank = 0;

  bool full_rank() const { return achieved_rank == required_rank; }
};

struct GraphEvidence {
  std::vector<VertexSet> union_components;
  /// Follower components of the union with no link to a leader.
  std::vector<VertexSet> unserved_components;
  /// Followers unreachable from every input in the summed pattern (Form I
  /// witness), as agent ids.
  VertexSet unreachable_followers;
  VertexSet isolated_leaders;
  /// Every B_i is zero: no follower hears any leader in any snapshot.
  bool null_input = false;
};

struct Verdict {
  bool structurally_controllable = false;
  Criterion criterion = Criterion::UnionConnected;
  GraphEvidence evidence;
  std::optional<Certificate> certificate;
};

struct DecideOptions {
  bool certify = false;
  std::uint64_t seed = 0;
  unsigned trials = kDefaultTrials;
  std::uint64_t bound = kDefaultBound;
};

/// Seed used for certification trial t under base seed s.
std::uint64_t trial_seed(std::uint64_t base, unsigned trial);

std::vector<StructuredPair> extract_pairs(const SwitchedNetwork &network);

Verdict decide(const SwitchedNetwork &network, const DecideOptions &options = {});

struct BlockRankReport {
  std::vector<VertexSet> components;       ///< follower components, agent ids
  std::vector<std::size_t> component_ranks;
  std::size_t total_rank = 0;
  std::size_t required_rank = 0;

  std::size_t rank_sum() const;
  bool additive() const { return rank_sum() == total_rank; }
};

/**
 * Splits the followers of a fixed topology into follower-subgraph
 * components and computes each component's controllability rank using the
 * restriction of the given assignment, alongside the rank of the full pair.
 * Row blocks of distinct components never share A entries, so the sum of
 * component ranks bounds the total from above; equality holds for generic
 * weights.
 */
BlockRankReport multi_leader_block_rank_check(const Topology &topology, const NumericPair &assignment);

} // namespace swctl
