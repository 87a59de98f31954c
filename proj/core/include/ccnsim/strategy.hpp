#pragma once

#include "ccnsim/centrality.hpp"
#include "ccnsim/node.hpp"

#include <random>
#include <string>

namespace ccnsim {

enum class StrategyKind { Nvcp, Lce, Prob, Mpc };

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Nvcp;
  double prob_p = 0.5;         // Prob only
  double mpc_threshold = 0.5;  // MPC only
  Weights weights;             // NVCP only
};

std::string strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);  // throws on unknown name

// Cache iff phi = popularity/node_value >= 1. A zero node value caches any
// positive popularity; popularity == node_value == 0 forwards.
CacheVerdict nvcp_decide(double popularity, double node_value);

// Leave Copy Everywhere: unconditional cache.
CacheVerdict lce_decide();

// Cache with probability p from the run's seeded stream.
CacheVerdict prob_decide(std::mt19937_64& rng, double p);

// Most Popular Content: cache iff popularity >= threshold.
CacheVerdict mpc_decide(double popularity, double threshold);

}  // namespace ccnsim
