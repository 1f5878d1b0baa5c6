#include "swctl/switched.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "swctl/exact.hpp"

namespace swctl {

namespace {

void check_dimensions(std::span<const NumericPair> pairs) {
  if (pairs.empty())
    throw DimensionMismatchError("no subsystems given");
  const std::size_t n = pairs.front().states(), r = pairs.front().inputs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const NumericPair &p = pairs[i];
    if (p.a.rows() != n || p.a.cols() != n || p.b.rows() != n || p.b.cols() != r)
      throw DimensionMismatchError("subsystem " + std::to_string(i) + " has shape A " +
                                   std::to_string(p.a.rows()) + "x" + std::to_string(p.a.cols()) +
                                   ", B " + std::to_string(p.b.rows()) + "x" +
                                   std::to_string(p.b.cols()) + "; expected A " + std::to_string(n) +
                                   "x" + std::to_string(n) + ", B " + std::to_string(n) + "x" +
                                   std::to_string(r));
  }
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

VertexSet to_agents(const VertexSet &ids, const std::vector<std::size_t> &states) {
  VertexSet out;
  out.reserve(states.size());
  for (std::size_t q : states)
    out.push_back(ids[q]);
  return out;
}

} // namespace

std::size_t reachable_subspace_rank(std::span<const NumericPair> pairs) {
  check_dimensions(pairs);
  const std::size_t n = pairs.front().states();
  SubspaceBasis basis(n);
  std::vector<IntVector> worklist;

  for (const NumericPair &p : pairs)
    for (std::size_t c = 0; c < p.inputs(); ++c) {
      IntVector added = basis.insert(p.b.column(c));
      if (!added.empty())
        worklist.push_back(std::move(added));
    }

  while (!worklist.empty() && !basis.full()) {
    IntVector v = std::move(worklist.back());
    worklist.pop_back();
    for (const NumericPair &p : pairs) {
      IntVector added = basis.insert(multiply(p.a, v));
      if (!added.empty())
        worklist.push_back(std::move(added));
    }
  }
  return basis.rank();
}

std::size_t switched_matrix_columns(std::size_t states, std::size_t inputs, std::size_t subsystems) {
  // m * r * (1 + m + ... + m^{n-1})
  std::size_t total = 0, words = subsystems;
  for (std::size_t k = 0; k < states; ++k) {
    total = saturating_add(total, saturating_mul(words, inputs));
    words = saturating_mul(words, subsystems);
  }
  return total;
}

IntMatrix enumerate_switched_matrix(std::span<const NumericPair> pairs, std::size_t cap) {
  check_dimensions(pairs);
  const std::size_t n = pairs.front().states(), r = pairs.front().inputs(), m = pairs.size();
  const std::size_t columns = switched_matrix_columns(n, r, m);
  if (columns > cap)
    throw CapExceededError("switched controllability matrix needs " +
                           (columns == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                               : std::to_string(columns)) +
                           " columns, cap is " + std::to_string(cap));

  std::vector<IntMatrix> blocks;
  blocks.reserve(columns / std::max<std::size_t>(r, 1));
  std::vector<IntMatrix> level;
  for (const NumericPair &p : pairs)
    level.push_back(p.b);
  for (std::size_t k = 0; k < n; ++k) {
    blocks.insert(blocks.end(), level.begin(), level.end());
    if (k + 1 == n)
      break;
    std::vector<IntMatrix> next;
    next.reserve(level.size() * m);
    for (const IntMatrix &word : level)
      for (const NumericPair &p : pairs)
        next.push_back(multiply(p.a, word));
    level = std::move(next);
  }
  return hconcat(blocks);
}

IntMatrix kalman_matrix(const NumericPair &pair) {
  std::vector<IntMatrix> blocks;
  blocks.push_back(pair.b);
  for (std::size_t k = 1; k < pair.states(); ++k)
    blocks.push_back(multiply(pair.a, blocks.back()));
  return hconcat(blocks);
}

std::size_t kalman_rank(const NumericPair &pair) { return exact_rank(kalman_matrix(pair)); }

std::string_view criterion_name(Criterion c) {
  switch (c) {
  case Criterion::FixedConnected:
    return "fixed topology connected";
  case Criterion::FixedLeaderFollowerConnected:
    return "fixed topology leader-follower connected";
  case Criterion::UnionConnected:
    return "union connected";
  case Criterion::UnionLeaderFollowerConnected:
    return "union leader-follower connected";
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t base, unsigned trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<StructuredPair> extract_pairs(const SwitchedNetwork &network) {
  std::vector<StructuredPair> pairs;
  pairs.reserve(network.size());
  for (const Topology &t : network.snapshots())
    pairs.push_back(extract_pair(t));
  return pairs;
}

Verdict decide(const SwitchedNetwork &network, const DecideOptions &options) {
  const Topology joined = union_graph(network);
  const std::vector<StructuredPair> pairs = extract_pairs(network);
  const PatternPair summed = summed_pattern(pairs);
  const bool single_leader = network.leaders().size() == 1;
  const bool fixed = network.size() == 1;

  Verdict verdict;
  if (single_leader)
    verdict.criterion = fixed ? Criterion::FixedConnected : Criterion::UnionConnected;
  else
    verdict.criterion = fixed ? Criterion::FixedLeaderFollowerConnected : Criterion::UnionLeaderFollowerConnected;

  GraphEvidence &ev = verdict.evidence;
  ev.union_components = connected_components(joined);
  ev.unserved_components = unserved_components(joined);
  ev.isolated_leaders = isolated_leaders(joined);
  ev.unreachable_followers = to_agents(pairs.front().follower_ids, form_I(summed).unreachable);
  ev.null_input = g_rank(summed.b) == 0;

  verdict.structurally_controllable =
      single_leader ? is_connected(joined) : is_leader_follower_connected(joined);

  if (options.certify && verdict.structurally_controllable) {
    const std::size_t required = pairs.front().n_followers();
    Certificate best;
    for (unsigned t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = trial_seed(options.seed, t);
      const auto numeric = instantiate_all(pairs, seed, options.bound);
      const std::size_t rank = reachable_subspace_rank(numeric);
      if (t == 0 || rank > best.achieved_rank)
        best = Certificate{seed, options.bound, t, rank, required};
      if (rank == required)
        break;
    }
    if (options.trials > 0)
      verdict.certificate = best;
  }
  return verdict;
}

std::size_t BlockRankReport::rank_sum() const {
  std::size_t s = 0;
  for (std::size_t r : component_ranks)
    s += r;
  return s;
}

BlockRankReport multi_leader_block_rank_check(const Topology &topology, const NumericPair &assignment) {
  const VertexSet &followers = topology.followers();
  const std::size_t n = followers.size(), r = topology.leaders().size();
  if (assignment.states() != n || assignment.inputs() != r || assignment.a.cols() != n)
    throw DimensionMismatchError("assignment does not match the topology's follower/leader counts");

  BlockRankReport report;
  report.required_rank = n;
  report.total_rank = kalman_rank(assignment);
  report.components = connected_components(follower_subgraph(topology));

  for (const VertexSet &comp : report.components) {
    std::vector<std::size_t> idx;
    for (AgentId a : comp)
      idx.push_back(static_cast<std::size_t>(std::lower_bound(followers.begin(), followers.end(), a) -
                                             followers.begin()));
    NumericPair block;
    block.a = IntMatrix(idx.size(), idx.size());
    block.b = IntMatrix(idx.size(), r);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j)
        block.a(i, j) = assignment.a(idx[i], idx[j]);
      for (std::size_t j = 0; j < r; ++j)
        block.b(i, j) = assignment.b(idx[i], j);
    }
    report.component_ranks.push_back(kalman_rank(block));
  }
  return report;
}

} // namespace swctl
