#include "swctl/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace swctl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw DocumentError(path + ": " + what);
}

std::string line_col(const std::string &text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int agent_id(const json &j, const std::string &path, int agents) {
  if (!j.is_number_integer())
    fail(path, "expected an integer agent id");
  const auto v = j.get<long long>();
  if (v < 0 || v >= agents)
    fail(path, "agent id " + std::to_string(v) + " out of range [0, " + std::to_string(agents) + ")");
  return static_cast<int>(v);
}

} // namespace

SwitchedNetwork NetworkDocument::to_network() const {
  try {
    return SwitchedNetwork::from_edge_lists(agents, leaders, topologies);
  } catch (const StructuralInputError &e) {
    throw DocumentError(std::string("network: ") + e.what());
  }
}

NetworkDocument NetworkDocument::from_network(const SwitchedNetwork &network, std::string name) {
  NetworkDocument doc;
  doc.name = std::move(name);
  doc.agents = network.agent_count();
  doc.leaders = network.leaders();
  for (const Topology &t : network.snapshots())
    doc.topologies.push_back(t.edges());
  return doc;
}

NetworkDocument parse_document(const std::string &text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    std::string msg = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix
    if (auto pos = msg.find(": "); pos != std::string::npos && msg.find("parse error") < pos)
      msg = msg.substr(pos + 2);
    throw DocumentError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }

  if (!root.is_object())
    fail("$", "expected a JSON object");
  for (const auto &item : root.items()) {
    static const std::set<std::string> known{"name", "agents", "leaders", "topologies"};
    if (!known.count(item.key()))
      fail(item.key(), "unknown field");
  }

  NetworkDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string())
      fail("name", "expected a string");
    doc.name = root["name"].get<std::string>();
  }

  if (!root.contains("agents"))
    fail("agents", "missing required field");
  const json &agents = root["agents"];
  if (!agents.is_number_integer())
    fail("agents", "expected an integer");
  if (agents.get<long long>() < 2 || agents.get<long long>() > 1'000'000)
    fail("agents", "agent count must lie in [2, 1000000], got " + std::to_string(agents.get<long long>()));
  doc.agents = agents.get<int>();

  if (!root.contains("leaders"))
    fail("leaders", "missing required field");
  const json &leaders = root["leaders"];
  if (!leaders.is_array())
    fail("leaders", "expected an array of agent ids");
  if (leaders.empty())
    fail("leaders", "at least one leader is required");
  std::set<int> leader_set;
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    const std::string path = "leaders[" + std::to_string(i) + "]";
    const int id = agent_id(leaders[i], path, doc.agents);
    if (!leader_set.insert(id).second)
      fail(path, "duplicate leader " + std::to_string(id));
    doc.leaders.push_back(id);
  }
  if (static_cast<int>(leader_set.size()) >= doc.agents)
    fail("leaders", "every agent is a leader; at least one follower is required");

  if (!root.contains("topologies"))
    fail("topologies", "missing required field");
  const json &topologies = root["topologies"];
  if (!topologies.is_array())
    fail("topologies", "expected an array of edge lists");
  if (topologies.empty())
    fail("topologies", "at least one topology is required");
  for (std::size_t t = 0; t < topologies.size(); ++t) {
    const std::string tpath = "topologies[" + std::to_string(t) + "]";
    if (!topologies[t].is_array())
      fail(tpath, "expected an array of [u, v] pairs");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t e = 0; e < topologies[t].size(); ++e) {
      const std::string epath = tpath + "[" + std::to_string(e) + "]";
      const json &pair = topologies[t][e];
      if (!pair.is_array() || pair.size() != 2)
        fail(epath, "expected a pair [u, v]");
      const int u = agent_id(pair[0], epath + "[0]", doc.agents);
      const int v = agent_id(pair[1], epath + "[1]", doc.agents);
      if (u == v)
        fail(epath, "self-pair on agent " + std::to_string(u));
      if (leader_set.count(u) && leader_set.count(v))
        fail(epath, "link between leaders " + std::to_string(u) + " and " + std::to_string(v));
      const Edge edge(u, v);
      if (!seen.insert(edge).second)
        fail(epath, "duplicate link {" + std::to_string(edge.u) + ", " + std::to_string(edge.v) + "}");
      edges.push_back(edge);
    }
    doc.topologies.push_back(std::move(edges));
  }
  return doc;
}

NetworkDocument load_document(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DocumentError("cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const NetworkDocument &doc) {
  std::ostringstream out;
  out << "{\n";
  if (!doc.name.empty())
    out << "  \"name\": " << json(doc.name).dump() << ",\n";
  out << "  \"agents\": " << doc.agents << ",\n";
  out << "  \"leaders\": " << json(doc.leaders).dump() << ",\n";
  out << "  \"topologies\": [\n";
  for (std::size_t t = 0; t < doc.topologies.size(); ++t) {
    out << "    [";
    for (std::size_t e = 0; e < doc.topologies[t].size(); ++e) {
      const Edge &edge = doc.topologies[t][e];
      out << (e ? ", " : "") << "[" << edge.u << ", " << edge.v << "]";
    }
    out << "]" << (t + 1 < doc.topologies.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

} // namespace swctl
