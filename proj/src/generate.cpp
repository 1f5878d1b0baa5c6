#include "swctl/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace swctl {

NetworkDocument generate_network(const GenParams &params) {
  if (params.leaders < 1)
    throw std::invalid_argument("gen: need at least one leader");
  if (params.agents < params.leaders + 1)
    throw std::invalid_argument("gen: agents must exceed leaders (got " + std::to_string(params.agents) +
                                " agents, " + std::to_string(params.leaders) + " leaders)");
  if (params.snapshots < 1)
    throw std::invalid_argument("gen: need at least one snapshot");
  if (!(params.edge_prob >= 0.0 && params.edge_prob <= 1.0))
    throw std::invalid_argument("gen: edge probability must lie in [0, 1]");

  std::mt19937_64 engine(params.seed);
  std::bernoulli_distribution coin(params.edge_prob);

  NetworkDocument doc;
  doc.agents = params.agents;
  for (int l = 0; l < params.leaders; ++l)
    doc.leaders.push_back(l);
  for (int s = 0; s < params.snapshots; ++s) {
    std::vector<Edge> edges;
    for (int u = 0; u < params.agents; ++u)
      for (int v = std::max(u + 1, params.leaders); v < params.agents; ++v)
        if (coin(engine))
          edges.emplace_back(u, v);
    doc.topologies.push_back(std::move(edges));
  }
  return doc;
}

} // namespace swctl
