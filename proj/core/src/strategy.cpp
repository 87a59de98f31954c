#include "ccnsim/strategy.hpp"

#include <stdexcept>

namespace ccnsim {

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Nvcp: return "nvcp";
    case StrategyKind::Lce: return "lce";
    case StrategyKind::Prob: return "prob";
    case StrategyKind::Mpc: return "mpc";
  }
  return "unknown";
}

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "nvcp") return StrategyKind::Nvcp;
  if (name == "lce") return StrategyKind::Lce;
  if (name == "prob") return StrategyKind::Prob;
  if (name == "mpc") return StrategyKind::Mpc;
  throw std::invalid_argument("unknown strategy: " + name);
}

CacheVerdict nvcp_decide(double popularity, double node_value) {
  if (node_value <= 0.0)
    return popularity > 0.0 ? CacheVerdict::Cache : CacheVerdict::Forward;
  return popularity >= node_value ? CacheVerdict::Cache : CacheVerdict::Forward;
}

CacheVerdict lce_decide() { return CacheVerdict::Cache; }

CacheVerdict prob_decide(std::mt19937_64& rng, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("prob_decide: p outside [0,1]");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < p ? CacheVerdict::Cache : CacheVerdict::Forward;
}

CacheVerdict mpc_decide(double popularity, double threshold) {
  if (threshold < 0.0 || threshold > 1.0)
    throw std::invalid_argument("mpc_decide: threshold outside [0,1]");
  return popularity >= threshold ? CacheVerdict::Cache : CacheVerdict::Forward;
}

}  // namespace ccnsim
