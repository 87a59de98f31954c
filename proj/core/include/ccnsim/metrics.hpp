#pragma once

#include <cstdint>
#include <string>

namespace ccnsim {

enum class SatisfiedAt { Cache, Server };

/// Per-run tallies behind the three reported measures.
struct MetricsReport {
  std::string strategy_label;
  int cache_size = 0;
  double zipf_a = 0.0;
  std::uint64_t seed = 0;

  std::uint64_t interests_issued = 0;
  std::uint64_t deliveries = 0;
  std::uint64_t cache_hits = 0;  // satisfied at a non-server node
  std::uint64_t anomalies = 0;   // orphan data, PIT leaks
  double hop_sum = 0.0;
  double latency_sum = 0.0;

  double hit_ratio() const {
    return interests_issued ? static_cast<double>(cache_hits) / interests_issued : 0.0;
  }
  double avg_hop_count() const {
    return deliveries ? hop_sum / deliveries : 0.0;
  }
  double avg_latency() const {
    return deliveries ? latency_sum / deliveries : 0.0;
  }
};

void record_delivery(MetricsReport& report, SatisfiedAt satisfied_at, int hops, double latency);

}  // namespace ccnsim
