#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swctl/commands.hpp"
#include "swctl/document.hpp"

using namespace swctl;

namespace {

const std::string kData = SWCTL_DATA_DIR;

std::string write_temp(const std::string &name, const std::string &text) {
  const auto path = std::filesystem::temp_directory_path() / ("swctl_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run analyze(cli::AnalyzeOptions opts) {
  std::ostringstream out, err;
  const int code = cli::cmd_analyze(opts, out, err);
  return {code, out.str(), err.str()};
}

Run gen(const GenParams &p) {
  std::ostringstream out, err;
  const int code = cli::cmd_gen(p, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze the bundled examples") {
  cli::AnalyzeOptions opts;
  opts.path = kData + "/fig1.json";
  opts.certify = true;
  const Run r1 = analyze(opts);
  CHECK(r1.code == 0);
  CHECK(r1.out.find("verdict: controllable (union connected)") != std::string::npos);
  CHECK(r1.out.find("certificate: rank 3/3") != std::string::npos);

  opts.path = kData + "/fig2.json";
  const Run r2 = analyze(opts);
  CHECK(r2.code == 1);
  CHECK(r2.out.find("verdict: uncontrollable (union not connected)") != std::string::npos);
  CHECK(r2.out.find("witness: isolated agent 2") != std::string::npos);
}

TEST_CASE("analyze json report") {
  cli::AnalyzeOptions opts;
  opts.path = kData + "/fig1.json";
  opts.certify = true;
  opts.json = true;
  opts.enumerate = true;
  const Run r = analyze(opts);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["controllable"] == true);
  CHECK(j["criterion"] == "union connected");
  CHECK(j["certificate"]["achieved_rank"] == 3);
  CHECK(j["certificate"]["required_rank"] == 3);
  CHECK(j["enumerated"]["columns"] == 14);
  CHECK(j["enumerated"]["rank"] == 3);
  CHECK(j["union_components"] == nlohmann::json::parse("[[0,1,2,3]]"));

  opts.path = kData + "/fig2.json";
  const auto j2 = nlohmann::json::parse(analyze(opts).out);
  CHECK(j2["controllable"] == false);
  CHECK(j2["unreachable_followers"] == nlohmann::json::parse("[2]"));
  CHECK(j2["certificate"].is_null());
}

TEST_CASE("analyze input errors") {
  cli::AnalyzeOptions opts;
  opts.path = write_temp("bad_leader.json", R"({"agents": 4, "leaders": [7], "topologies": [[]]})");
  Run r = analyze(opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("leaders[0]") != std::string::npos);

  opts.path = write_temp("bad_edge.json", R"({"agents": 4, "leaders": [0], "topologies": [[[1, 2]], [[0, "x"]]]})");
  r = analyze(opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("topologies[1][0][1]") != std::string::npos);

  opts.path = write_temp("leader_link.json", R"({"agents": 4, "leaders": [0, 1], "topologies": [[[0, 1]]]})");
  r = analyze(opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("topologies[0][0]") != std::string::npos);

  opts.path = write_temp("syntax.json", "{\n  \"agents\": 4,\n  \"leaders\": [0,,]\n}");
  r = analyze(opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  opts.path = write_temp("unknown.json", R"({"agents": 4, "leaders": [0], "topologies": [[]], "wieghts": 1})");
  CHECK(analyze(opts).code == 2);

  opts.path = kData + "/does_not_exist.json";
  CHECK(analyze(opts).code == 2);

  opts.path = kData + "/fig1.json";
  opts.enumerate = true;
  opts.cap = 10;
  r = analyze(opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("oracle command") {
  cli::OracleOptions opts;
  opts.path = kData + "/fig1.json";
  std::ostringstream out, err;
  CHECK(cli::cmd_oracle(opts, out, err) == 0);
  CHECK(out.str().find("fixpoint rank 3 == enumerated rank 3") != std::string::npos);
  CHECK(out.str().find("Kalman rank") != std::string::npos);
  CHECK(out.str().find("MISMATCH") == std::string::npos);

  opts.cap = 5;
  std::ostringstream out2, err2;
  CHECK(cli::cmd_oracle(opts, out2, err2) == 2);
}

TEST_CASE("gen is deterministic and honours extremes") {
  GenParams p{5, 2, 3, 0.4, 1234};
  const Run a = gen(p), b = gen(p);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  p.edge_prob = 0.0;
  const NetworkDocument empty = parse_document(gen(p).out);
  for (const auto &t : empty.topologies)
    CHECK(t.empty());

  p.edge_prob = 1.0;
  const NetworkDocument full = parse_document(gen(p).out);
  // 5 agents, 2 leaders: C(5,2) - C(2,2) = 9 admissible pairs.
  for (const auto &t : full.topologies)
    CHECK(t.size() == 9);

  CHECK(gen(GenParams{2, 2, 1, 0.5, 0}).code == 2);
  CHECK(gen(GenParams{4, 1, 0, 0.5, 0}).code == 2);
  CHECK(gen(GenParams{4, 1, 1, 1.5, 0}).code == 2);
}

TEST_CASE("property: generated documents round-trip") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenParams p{2 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 2), 1 + static_cast<int>(seed % 3),
                      0.1 * static_cast<double>(seed % 11), seed};
    if (p.agents <= p.leaders)
      continue;
    const NetworkDocument doc = generate_network(p);
    const std::string text = serialize_document(doc);
    const NetworkDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(back.to_network() == doc.to_network());
    CHECK(serialize_document(NetworkDocument::from_network(back.to_network())) == text);
  }
}
