#include "swctl/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace swctl {

namespace {

std::string edge_str(const Edge &e) {
  return "{" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}";
}

VertexSet normalized_leaders(int agents, VertexSet leaders) {
  if (agents < 2)
    throw StructuralInputError("network needs at least two agents (one leader, one follower), got " +
                               std::to_string(agents));
  std::sort(leaders.begin(), leaders.end());
  if (std::adjacent_find(leaders.begin(), leaders.end()) != leaders.end())
    throw StructuralInputError("duplicate leader id");
  if (leaders.empty())
    throw StructuralInputError("leader set is empty");
  for (AgentId l : leaders)
    if (l < 0 || l >= agents)
      throw StructuralInputError("leader id " + std::to_string(l) + " out of range [0, " +
                                 std::to_string(agents) + ")");
  if (static_cast<int>(leaders.size()) >= agents)
    throw StructuralInputError("every agent is a leader; at least one follower is required");
  return leaders;
}

} // namespace

Topology::Topology(int agents, VertexSet leaders, std::vector<Edge> edges)
    : agents_(agents), leaders_(normalized_leaders(agents, std::move(leaders))),
      edges_(std::move(edges)) {
  is_leader_.assign(static_cast<std::size_t>(agents_), 0);
  for (AgentId l : leaders_)
    is_leader_[static_cast<std::size_t>(l)] = 1;
  for (AgentId a = 0; a < agents_; ++a)
    if (!is_leader(a))
      followers_.push_back(a);

  for (Edge &e : edges_) {
    e = Edge(e.u, e.v);
    if (e.u < 0 || e.v >= agents_)
      throw StructuralInputError("edge " + edge_str(e) + " references an agent outside [0, " +
                                 std::to_string(agents_) + ")");
    if (e.u == e.v)
      throw StructuralInputError("edge " + edge_str(e) + " is a self-pair");
    if (is_leader(e.u) && is_leader(e.v))
      throw StructuralInputError("edge " + edge_str(e) + " joins two leaders");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw StructuralInputError("duplicate edge " + edge_str(*dup));
}

bool Topology::has_edge(AgentId a, AgentId b) const {
  if (a == b)
    return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::vector<VertexSet> Topology::adjacency() const {
  std::vector<VertexSet> adj(static_cast<std::size_t>(agents_));
  for (const Edge &e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

Subgraph Topology::as_subgraph() const {
  Subgraph g;
  g.vertices.resize(static_cast<std::size_t>(agents_));
  for (AgentId a = 0; a < agents_; ++a)
    g.vertices[static_cast<std::size_t>(a)] = a;
  g.edges = edges_;
  return g;
}

SwitchedNetwork::SwitchedNetwork(int agents, VertexSet leaders, std::vector<Topology> snapshots)
    : agents_(agents), leaders_(normalized_leaders(agents, std::move(leaders))),
      snapshots_(std::move(snapshots)) {
  if (snapshots_.empty())
    throw StructuralInputError("switched network needs at least one snapshot");
  for (std::size_t i = 0; i < snapshots_.size(); ++i) {
    if (snapshots_[i].agent_count() != agents_ || snapshots_[i].leaders() != leaders_)
      throw StructuralInputError("snapshot " + std::to_string(i) +
                                 " does not share the network's agent and leader sets");
  }
}

SwitchedNetwork SwitchedNetwork::from_edge_lists(int agents, VertexSet leaders,
                                                 const std::vector<std::vector<Edge>> &edge_lists) {
  std::vector<Topology> snaps;
  snaps.reserve(edge_lists.size());
  for (const auto &edges : edge_lists)
    snaps.emplace_back(agents, leaders, edges);
  return SwitchedNetwork(agents, std::move(leaders), std::move(snaps));
}

Topology union_graph(const SwitchedNetwork &network) {
  std::vector<Edge> all;
  for (const Topology &t : network.snapshots())
    all.insert(all.end(), t.edges().begin(), t.edges().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Topology(network.agent_count(), network.leaders(), std::move(all));
}

std::vector<VertexSet> connected_components(const Subgraph &graph) {
  // Vertices may be an arbitrary sorted id list; map them to dense slots.
  const auto &vs = graph.vertices;
  auto slot = [&](AgentId a) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
  };
  std::vector<std::vector<std::size_t>> adj(vs.size());
  for (const Edge &e : graph.edges) {
    std::size_t a = slot(e.u), b = slot(e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<VertexSet> components;
  std::vector<char> seen(vs.size(), 0);
  for (std::size_t start = 0; start < vs.size(); ++start) {
    if (seen[start])
      continue;
    VertexSet comp;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = 1;
    while (!frontier.empty()) {
      std::size_t cur = frontier.front();
      frontier.pop();
      comp.push_back(vs[cur]);
      for (std::size_t next : adj[cur]) {
        if (!seen[next]) {
          seen[next] = 1;
          frontier.push(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  // Starting points are visited in increasing id order, so components are
  // already ordered by their smallest member.
  return components;
}

std::vector<VertexSet> connected_components(const Topology &topology) {
  return connected_components(topology.as_subgraph());
}

bool is_connected(const Topology &topology) { return connected_components(topology).size() == 1; }

Subgraph follower_subgraph(const Topology &topology) {
  Subgraph g;
  g.vertices = topology.followers();
  for (const Edge &e : topology.edges())
    if (!topology.is_leader(e.u) && !topology.is_leader(e.v))
      g.edges.push_back(e);
  return g;
}

std::vector<VertexSet> unserved_components(const Topology &topology) {
  std::vector<char> touches_leader(static_cast<std::size_t>(topology.agent_count()), 0);
  for (const Edge &e : topology.edges()) {
    if (topology.is_leader(e.u))
      touches_leader[static_cast<std::size_t>(e.v)] = 1;
    if (topology.is_leader(e.v))
      touches_leader[static_cast<std::size_t>(e.u)] = 1;
  }
  std::vector<VertexSet> unserved;
  for (VertexSet &comp : connected_components(follower_subgraph(topology))) {
    bool served = std::any_of(comp.begin(), comp.end(), [&](AgentId a) {
      return touches_leader[static_cast<std::size_t>(a)] != 0;
    });
    if (!served)
      unserved.push_back(std::move(comp));
  }
  return unserved;
}

bool is_leader_follower_connected(const Topology &topology) {
  return unserved_components(topology).empty();
}

VertexSet isolated_leaders(const Topology &topology) {
  VertexSet out;
  auto adj = topology.adjacency();
  for (AgentId l : topology.leaders())
    if (adj[static_cast<std::size_t>(l)].empty())
      out.push_back(l);
  return out;
}

} // namespace swctl
