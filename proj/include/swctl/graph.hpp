#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace swctl {

using AgentId = int;

/// Raised when a topology or network violates its structural invariants.
class StructuralInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected link between two distinct agents, stored with u < v.
struct Edge {
  AgentId u = 0;
  AgentId v = 0;

  Edge() = default;
  Edge(AgentId a, AgentId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge &) const = default;
};

using VertexSet = std::vector<AgentId>;

/// Plain undirected graph over an explicit vertex list. Used for induced
/// subgraphs that carry no leader/follower roles.
struct Subgraph {
  VertexSet vertices; // sorted
  std::vector<Edge> edges; // sorted, unique
};

/**
 * One communication snapshot: agents 0..n-1, a nonempty strict subset of
 * leaders, and a set of undirected links. Every follower implicitly carries
 * a self-weight; every link carries one weight per direction.
 *
 * Invariants (checked on construction):
 *  - at least one leader and at least one follower;
 *  - no self-pairs, no duplicate links, no leader-leader links;
 *  - every id lies in [0, n).
 */
class Topology {
public:
  Topology(int agents, VertexSet leaders, std::vector<Edge> edges);

  int agent_count() const { return agents_; }
  const VertexSet &leaders() const { return leaders_; }
  const VertexSet &followers() const { return followers_; }
  const std::vector<Edge> &edges() const { return edges_; }

  bool is_leader(AgentId a) const { return is_leader_[static_cast<std::size_t>(a)] != 0; }
  bool has_edge(AgentId a, AgentId b) const;

  /// Neighbour lists indexed by agent id.
  std::vector<VertexSet> adjacency() const;

  Subgraph as_subgraph() const;

  bool operator==(const Topology &) const = default;

private:
  int agents_;
  VertexSet leaders_;
  VertexSet followers_;
  std::vector<Edge> edges_;
  std::vector<char> is_leader_;
};

/// An ordered family of snapshots over one agent set and one leader set.
class SwitchedNetwork {
public:
  SwitchedNetwork(int agents, VertexSet leaders, std::vector<Topology> snapshots);

  /// Builds every snapshot from raw edge lists.
  static SwitchedNetwork from_edge_lists(int agents, VertexSet leaders,
                                         const std::vector<std::vector<Edge>> &edge_lists);

  int agent_count() const { return agents_; }
  const VertexSet &leaders() const { return leaders_; }
  const std::vector<Topology> &snapshots() const { return snapshots_; }
  std::size_t size() const { return snapshots_.size(); }

  bool operator==(const SwitchedNetwork &) const = default;

private:
  int agents_;
  VertexSet leaders_;
  std::vector<Topology> snapshots_;
};

Topology union_graph(const SwitchedNetwork &network);

bool is_connected(const Topology &topology);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Subgraph &graph);
std::vector<VertexSet> connected_components(const Topology &topology);

/// Subgraph induced by the follower set.
Subgraph follower_subgraph(const Topology &topology);

/// Follower components that have no link to any leader.
std::vector<VertexSet> unserved_components(const Topology &topology);

/// Every follower component has at least one link to some leader.
bool is_leader_follower_connected(const Topology &topology);

/// Leaders without any incident link.
VertexSet isolated_leaders(const Topology &topology);

} // namespace swctl
