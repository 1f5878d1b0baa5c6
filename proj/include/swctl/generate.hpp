#pragma once

#include <cstdint>

#include "swctl/document.hpp"

namespace swctl {

struct GenParams {
  int agents = 4;
  int leaders = 1;
  int snapshots = 1;
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
};

/// Random network with leaders 0..leaders-1. Each follower-follower and
/// follower-leader pair is linked independently with probability edge_prob
/// in each snapshot; leader pairs are never linked. Deterministic in seed.
NetworkDocument generate_network(const GenParams &params);

} // namespace swctl
