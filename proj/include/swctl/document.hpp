#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "swctl/graph.hpp"

namespace swctl {

/// Malformed or invalid network file. The message starts with the
/// location: a field path such as "topologies[1][0]" or "line 3, column 7".
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * On-disk description of a switched network:
 *
 *   {
 *     "name": "optional label",
 *     "agents": 4,
 *     "leaders": [0],
 *     "topologies": [ [[1, 3], [0, 2]], [[0, 3], [1, 2]] ]
 *   }
 *
 * Agents are numbered 0..agents-1. Each topology lists every undirected
 * link once.
 */
struct NetworkDocument {
  std::string name;
  int agents = 0;
  VertexSet leaders;
  std::vector<std::vector<Edge>> topologies;

  SwitchedNetwork to_network() const;
  static NetworkDocument from_network(const SwitchedNetwork &network, std::string name = {});

  bool operator==(const NetworkDocument &) const = default;
};

NetworkDocument parse_document(const std::string &text);
NetworkDocument load_document(const std::string &path);

/// Stable, one-topology-per-line JSON rendering.
std::string serialize_document(const NetworkDocument &doc);

} // namespace swctl
