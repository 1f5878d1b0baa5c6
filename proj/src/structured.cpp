#include "swctl/structured.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace swctl {

StructuredPair extract_pair(const Topology &topology) {
  StructuredPair out;
  out.follower_ids = topology.followers();
  out.leader_ids = topology.leaders();
  const std::size_t n = out.follower_ids.size();
  const std::size_t r = out.leader_ids.size();

  std::vector<std::size_t> index(static_cast<std::size_t>(topology.agent_count()));
  for (std::size_t q = 0; q < n; ++q)
    index[static_cast<std::size_t>(out.follower_ids[q])] = q;
  for (std::size_t p = 0; p < r; ++p)
    index[static_cast<std::size_t>(out.leader_ids[p])] = p;

  out.pattern.a = Pattern(n, n, 0);
  out.pattern.b = Pattern(n, r, 0);
  for (std::size_t q = 0; q < n; ++q)
    out.pattern.a(q, q) = 1;
  for (const Edge &e : topology.edges()) {
    const bool lu = topology.is_leader(e.u), lv = topology.is_leader(e.v);
    const std::size_t iu = index[static_cast<std::size_t>(e.u)];
    const std::size_t iv = index[static_cast<std::size_t>(e.v)];
    if (!lu && !lv) {
      out.pattern.a(iu, iv) = 1;
      out.pattern.a(iv, iu) = 1;
    } else if (lu) {
      out.pattern.b(iv, iu) = 1;
    } else {
      out.pattern.b(iu, iv) = 1;
    }
  }

  int id = 0;
  for (std::size_t q = 0; q < n; ++q)
    out.params.push_back({id++, Block::A, q, q});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && out.pattern.a(i, j))
        out.params.push_back({id++, Block::A, i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (out.pattern.b(i, j))
        out.params.push_back({id++, Block::B, i, j});
  return out;
}

PatternPair summed_pattern(std::span<const StructuredPair> pairs) {
  if (pairs.empty())
    throw std::invalid_argument("summed_pattern: no pairs");
  PatternPair sum = pairs.front().pattern;
  for (const StructuredPair &p : pairs.subspan(1)) {
    if (p.n_followers() != sum.states() || p.n_leaders() != sum.inputs())
      throw std::invalid_argument("summed_pattern: dimension mismatch");
    for (std::size_t i = 0; i < sum.states(); ++i) {
      for (std::size_t j = 0; j < sum.states(); ++j)
        sum.a(i, j) |= p.pattern.a(i, j);
      for (std::size_t j = 0; j < sum.inputs(); ++j)
        sum.b(i, j) |= p.pattern.b(i, j);
    }
  }
  return sum;
}

std::size_t g_rank(const Pattern &pattern) {
  const std::size_t rows = pattern.rows(), cols = pattern.cols();
  std::vector<std::ptrdiff_t> match_of_col(cols, -1);
  std::vector<char> visited;

  // Kuhn's augmenting-path matching; patterns here are small.
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!pattern(row, c) || visited[c])
        continue;
      visited[c] = 1;
      if (match_of_col[c] < 0 || augment(static_cast<std::size_t>(match_of_col[c]))) {
        match_of_col[c] = static_cast<std::ptrdiff_t>(row);
        return true;
      }
    }
    return false;
  };

  std::size_t matched = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    visited.assign(cols, 0);
    if (augment(r))
      ++matched;
  }
  return matched;
}

Pattern concat(const PatternPair &pair) {
  const std::size_t n = pair.states(), r = pair.inputs();
  Pattern ab(n, n + r, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      ab(i, j) = pair.a(i, j);
    for (std::size_t j = 0; j < r; ++j)
      ab(i, n + j) = pair.b(i, j);
  }
  return ab;
}

FormIResult form_I(const PatternPair &pair) {
  const std::size_t n = pair.states(), r = pair.inputs();
  // Edge x_p -> x_q when A(q, p) is free; u_p -> x_q when B(q, p) is free.
  std::vector<char> reached(n, 0);
  std::queue<std::size_t> frontier;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < r; ++p)
      if (pair.b(q, p) && !reached[q]) {
        reached[q] = 1;
        frontier.push(q);
      }
  while (!frontier.empty()) {
    std::size_t p = frontier.front();
    frontier.pop();
    for (std::size_t q = 0; q < n; ++q)
      if (pair.a(q, p) && !reached[q]) {
        reached[q] = 1;
        frontier.push(q);
      }
  }
  FormIResult res;
  for (std::size_t q = 0; q < n; ++q)
    if (!reached[q])
      res.unreachable.push_back(q);
  res.reducible = !res.unreachable.empty();
  return res;
}

bool is_form_II(const PatternPair &pair) { return g_rank(concat(pair)) < pair.states(); }

NumericPair instantiate(const StructuredPair &pair, std::mt19937_64 &engine, std::uint64_t bound) {
  if (bound < 1)
    throw std::invalid_argument("instantiate: bound must be at least 1");
  std::uniform_int_distribution<std::uint64_t> dist(1, bound);
  NumericPair out;
  out.a = IntMatrix(pair.n_followers(), pair.n_followers());
  out.b = IntMatrix(pair.n_followers(), pair.n_leaders());
  out.assignment.resize(pair.params.size());
  for (const FreeEntry &e : pair.params) {
    const std::uint64_t draw = dist(engine);
    // mpz_class lacks a portable uint64_t constructor.
    Integer value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof(draw), 0, 0, &draw);
    out.assignment[static_cast<std::size_t>(e.id)] = value;
    (e.block == Block::A ? out.a : out.b)(e.row, e.col) = value;
  }
  return out;
}

NumericPair instantiate(const StructuredPair &pair, std::uint64_t seed, std::uint64_t bound) {
  std::mt19937_64 engine(seed);
  return instantiate(pair, engine, bound);
}

std::vector<NumericPair> instantiate_all(std::span<const StructuredPair> pairs, std::uint64_t seed,
                                         std::uint64_t bound) {
  std::mt19937_64 engine(seed);
  std::vector<NumericPair> out;
  out.reserve(pairs.size());
  for (const StructuredPair &p : pairs)
    out.push_back(instantiate(p, engine, bound));
  return out;
}

NumericPair instantiate_constant(const StructuredPair &pair, long value) {
  NumericPair out;
  out.a = IntMatrix(pair.n_followers(), pair.n_followers());
  out.b = IntMatrix(pair.n_followers(), pair.n_leaders());
  out.assignment.assign(pair.params.size(), Integer(value));
  for (const FreeEntry &e : pair.params)
    (e.block == Block::A ? out.a : out.b)(e.row, e.col) = value;
  return out;
}

} // namespace swctl
