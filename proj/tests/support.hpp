#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "swctl/generate.hpp"
#include "swctl/structured.hpp"
#include "swctl/switched.hpp"

namespace swctl::testing {

inline SwitchedNetwork random_network(std::mt19937_64 &rng, int agents, int leaders, int snapshots,
                                      double edge_prob) {
  GenParams p;
  p.agents = agents;
  p.leaders = leaders;
  p.snapshots = snapshots;
  p.edge_prob = edge_prob;
  p.seed = rng();
  return generate_network(p).to_network();
}

/// Random network with 1..max_leaders leaders, up to max_agents agents.
inline SwitchedNetwork any_network(std::mt19937_64 &rng, int max_agents = 6, int max_leaders = 3,
                                   int max_snapshots = 3) {
  static constexpr double probs[] = {0.2, 0.4, 0.7};
  const int leaders = std::uniform_int_distribution<int>(1, max_leaders)(rng);
  const int agents = std::uniform_int_distribution<int>(leaders + 1, std::max(leaders + 1, max_agents))(rng);
  const int m = std::uniform_int_distribution<int>(1, max_snapshots)(rng);
  return random_network(rng, agents, leaders, m, probs[rng() % 3]);
}

inline Pattern random_pattern(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution coin(density);
  Pattern p(rows, cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      p(i, j) = coin(rng) ? 1 : 0;
  return p;
}

/// Integer matrix with the given support and values uniform in [1, bound].
inline IntMatrix instantiate_pattern(const Pattern &p, std::mt19937_64 &rng, unsigned long bound) {
  std::uniform_int_distribution<unsigned long> dist(1, bound);
  IntMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j))
        m(i, j) = dist(rng);
  return m;
}

inline NumericPair instantiate_pattern_pair(const PatternPair &p, std::mt19937_64 &rng, unsigned long bound) {
  NumericPair out;
  out.a = instantiate_pattern(p.a, rng, bound);
  out.b = instantiate_pattern(p.b, rng, bound);
  return out;
}

/// Same network with agent a renamed to perm[a].
inline SwitchedNetwork relabel(const SwitchedNetwork &net, const std::vector<int> &perm) {
  VertexSet leaders;
  for (AgentId l : net.leaders())
    leaders.push_back(perm[static_cast<std::size_t>(l)]);
  std::vector<std::vector<Edge>> lists;
  for (const Topology &t : net.snapshots()) {
    std::vector<Edge> edges;
    for (const Edge &e : t.edges())
      edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    lists.push_back(std::move(edges));
  }
  return SwitchedNetwork::from_edge_lists(net.agent_count(), leaders, lists);
}

inline std::vector<int> random_permutation(std::mt19937_64 &rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::vector<std::vector<Edge>> edge_lists(const SwitchedNetwork &net) {
  std::vector<std::vector<Edge>> lists;
  for (const Topology &t : net.snapshots())
    lists.push_back(t.edges());
  return lists;
}

/// Adds one admissible link absent from snapshot s, if any.
inline bool add_random_edge(std::mt19937_64 &rng, std::vector<std::vector<Edge>> &lists, const SwitchedNetwork &net,
                            std::size_t s) {
  const Topology &t = net.snapshots()[s];
  std::vector<Edge> missing;
  for (int u = 0; u < net.agent_count(); ++u)
    for (int v = u + 1; v < net.agent_count(); ++v)
      if (!(t.is_leader(u) && t.is_leader(v)) && !t.has_edge(u, v))
        missing.emplace_back(u, v);
  if (missing.empty())
    return false;
  lists[s].push_back(missing[rng() % missing.size()]);
  return true;
}

} // namespace swctl::testing
