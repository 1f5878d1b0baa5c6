#include "swctl/commands.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "swctl/exact.hpp"
#include "swctl/oracles.hpp"

namespace swctl::cli {

namespace {

using nlohmann::ordered_json;

std::string set_str(const VertexSet &s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? ", " : "") << s[i];
  out << "}";
  return out.str();
}

std::string_view failed_name(Criterion c) {
  switch (c) {
  case Criterion::FixedConnected:
    return "fixed topology not connected";
  case Criterion::FixedLeaderFollowerConnected:
    return "fixed topology not leader-follower connected";
  case Criterion::UnionConnected:
    return "union not connected";
  case Criterion::UnionLeaderFollowerConnected:
    return "union not leader-follower connected";
  }
  return "unknown";
}

std::vector<std::string> witness_lines(const Verdict &v, const Topology &joined) {
  std::vector<std::string> lines;
  const auto adj = joined.adjacency();
  if (v.evidence.null_input)
    lines.push_back("no leader has a link in any snapshot (every B_i is zero)");
  for (AgentId l : v.evidence.isolated_leaders)
    lines.push_back("isolated leader " + std::to_string(l));
  for (const VertexSet &comp : v.evidence.unserved_components) {
    if (comp.size() == 1 && adj[static_cast<std::size_t>(comp.front())].empty())
      lines.push_back("isolated agent " + std::to_string(comp.front()));
    else
      lines.push_back("follower component " + set_str(comp) + " has no link to a leader");
  }
  return lines;
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > cap / k)
      return cap + 1;
    f *= k;
  }
  return f;
}

std::optional<SwitchedNetwork> load(const std::string &path, NetworkDocument &doc, std::ostream &err) {
  try {
    doc = load_document(path);
    return doc.to_network();
  } catch (const DocumentError &e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

} // namespace

int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out, std::ostream &err) {
  NetworkDocument doc;
  const auto loaded = load(opts.path, doc, err);
  if (!loaded)
    return kInputError;
  const SwitchedNetwork &network = *loaded;
  if (opts.bound < 1) {
    err << "error: --bound must be at least 1\n";
    return kInputError;
  }

  DecideOptions dopts;
  dopts.certify = opts.certify;
  dopts.seed = opts.seed;
  dopts.trials = opts.trials;
  dopts.bound = opts.bound;
  const Verdict verdict = decide(network, dopts);
  const Topology joined = union_graph(network);

  std::optional<std::pair<std::size_t, std::size_t>> enumerated; // columns, rank
  if (opts.enumerate) {
    const auto pairs = extract_pairs(network);
    const std::uint64_t seed = verdict.certificate ? verdict.certificate->seed : trial_seed(opts.seed, 0);
    try {
      const IntMatrix m = enumerate_switched_matrix(instantiate_all(pairs, seed, opts.bound), opts.cap);
      enumerated.emplace(m.cols(), exact_rank(m));
    } catch (const CapExceededError &e) {
      err << "error: --enumerate: " << e.what() << "\n";
      return kInputError;
    }
  }

  const std::size_t states = network.agent_count() - network.leaders().size();
  if (opts.json) {
    ordered_json report;
    report["name"] = doc.name;
    report["agents"] = network.agent_count();
    report["leaders"] = network.leaders();
    report["snapshots"] = network.size();
    report["controllable"] = verdict.structurally_controllable;
    report["criterion"] = std::string(criterion_name(verdict.criterion));
    report["union_components"] = verdict.evidence.union_components;
    report["unserved_components"] = verdict.evidence.unserved_components;
    report["unreachable_followers"] = verdict.evidence.unreachable_followers;
    report["isolated_leaders"] = verdict.evidence.isolated_leaders;
    report["null_input"] = verdict.evidence.null_input;
    report["witness"] = witness_lines(verdict, joined);
    if (verdict.certificate) {
      const Certificate &c = *verdict.certificate;
      report["certificate"] = {{"seed", c.seed},
                               {"bound", c.bound},
                               {"trial", c.trial},
                               {"achieved_rank", c.achieved_rank},
                               {"required_rank", c.required_rank}};
    } else {
      report["certificate"] = nullptr;
    }
    if (enumerated)
      report["enumerated"] = {{"columns", enumerated->first}, {"rank", enumerated->second}};
    out << report.dump(2) << "\n";
  } else {
    out << "network: " << (doc.name.empty() ? opts.path : doc.name) << " (" << network.agent_count()
        << " agents, leaders " << set_str(network.leaders()) << ", " << network.size() << " snapshot"
        << (network.size() == 1 ? "" : "s") << ")\n";
    if (verdict.structurally_controllable)
      out << "verdict: controllable (" << criterion_name(verdict.criterion) << ")\n";
    else
      out << "verdict: uncontrollable (" << failed_name(verdict.criterion) << ")\n";
    out << "union components:";
    for (const VertexSet &c : verdict.evidence.union_components)
      out << " " << set_str(c);
    out << "\n";
    for (const std::string &w : witness_lines(verdict, joined))
      out << "witness: " << w << "\n";
    if (verdict.certificate) {
      const Certificate &c = *verdict.certificate;
      out << "certificate: rank " << c.achieved_rank << "/" << c.required_rank << " (trial " << c.trial
          << ", seed " << c.seed << ", weights in [1, " << c.bound << "])\n";
    }
    if (enumerated)
      out << "enumerated matrix: " << enumerated->first << " columns, rank " << enumerated->second << "/"
          << states << "\n";
  }
  return verdict.structurally_controllable ? kControllable : kUncontrollable;
}

int cmd_oracle(const OracleOptions &opts, std::ostream &out, std::ostream &err) {
  NetworkDocument doc;
  const auto loaded = load(opts.path, doc, err);
  if (!loaded)
    return kInputError;
  const SwitchedNetwork &network = *loaded;
  const auto pairs = extract_pairs(network);
  const std::size_t n = pairs.front().n_followers(), r = pairs.front().n_leaders();

  const std::size_t columns = switched_matrix_columns(n, r, pairs.size());
  if (columns > opts.cap) {
    err << "error: switched controllability matrix needs " << columns << " columns, cap is " << opts.cap
        << "\n";
    return kInputError;
  }
  if (factorial_capped(n, opts.cap) > opts.cap) {
    err << "error: permutation search over " << n << " states exceeds cap " << opts.cap << "\n";
    return kInputError;
  }

  bool all_ok = true;
  auto report = [&](bool ok, const std::string &line) {
    all_ok = all_ok && ok;
    out << (ok ? "[ok] " : "[MISMATCH] ") << line << "\n";
  };
  auto eq = [](bool ok) { return ok ? " == " : " != "; };
  auto b2s = [](bool b) { return b ? std::string("true") : std::string("false"); };

  const auto numeric = instantiate_all(pairs, trial_seed(opts.seed, 0), opts.bound);
  const std::size_t fix = reachable_subspace_rank(numeric);
  const IntMatrix lemma = enumerate_switched_matrix(numeric, opts.cap);
  const std::size_t enu = exact_rank(lemma);
  report(fix == enu, "fixpoint rank " + std::to_string(fix) + eq(fix == enu) + "enumerated rank " +
                         std::to_string(enu));
  const std::size_t rat = oracle::rational_rank(lemma);
  report(enu == rat, "fraction-free rank " + std::to_string(enu) + eq(enu == rat) + "rational rank " +
                         std::to_string(rat));

  auto form_checks = [&](const PatternPair &p, const std::string &label) {
    const bool f1 = is_form_I(p), o1 = oracle::is_form_I_by_permutation(p);
    report(f1 == o1, label + ": Form I reachability " + b2s(f1) + eq(f1 == o1) + "permutation search " + b2s(o1));
    const bool f2 = is_form_II(p), o2 = oracle::is_form_II_by_permutation(p);
    report(f2 == o2, label + ": Form II matching " + b2s(f2) + eq(f2 == o2) + "permutation search " + b2s(o2));
  };
  form_checks(summed_pattern(pairs), "summed pattern");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    form_checks(pairs[i].pattern, "snapshot " + std::to_string(i));
    const NumericPair &single = numeric[i];
    const std::size_t sw = reachable_subspace_rank(std::span(&single, 1));
    const std::size_t ka = kalman_rank(single);
    report(sw == ka, "snapshot " + std::to_string(i) + " alone: switched rank " + std::to_string(sw) +
                         eq(sw == ka) + "Kalman rank " + std::to_string(ka));
  }
  return all_ok ? 0 : 1;
}

int cmd_gen(const GenParams &params, std::ostream &out, std::ostream &err) {
  try {
    out << serialize_document(generate_network(params));
    return 0;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

} // namespace swctl::cli
