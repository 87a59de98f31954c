#pragma once

#include "ccnsim/centrality.hpp"
#include "ccnsim/metrics.hpp"
#include "ccnsim/node.hpp"
#include "ccnsim/strategy.hpp"
#include "ccnsim/topology.hpp"
#include "ccnsim/workload.hpp"

#include <cstdint>
#include <vector>

namespace ccnsim {

/// Fixed-latency, infinite-capacity links. Interest packets are treated as
/// negligibly small: serialization cost applies to data hops only.
struct LinkModel {
  double per_hop_delay = 0.010;     // seconds
  double bandwidth_bps = 10e6;      // bits per second
  double data_packet_bits = 8000.0;

  double interest_hop_latency() const { return per_hop_delay; }
  double data_hop_latency() const { return per_hop_delay + data_packet_bits / bandwidth_bps; }
};

struct RunInputs {
  const Graph* graph = nullptr;
  const ShortestPathTable* spt = nullptr;
  const CentralityTable* centrality = nullptr;
  StrategyConfig strategy;
  WorkloadConfig workload;
  LinkModel link;
  int cache_capacity = 1000;
  std::uint64_t seed = 0;
  Placement placement;
};

// Single deterministic simulation run. Interests are generated in
// [0, duration); the event queue drains fully so in-flight packets complete.
// Bit-identical reports for identical inputs. Optionally exports the request
// trace used. Anomalies (orphan data, PIT leaks) are counted in the report.
MetricsReport run(const RunInputs& inputs, std::vector<Request>* trace_out = nullptr);

// Same engine over a fixed request trace (replay of an exported trace).
MetricsReport replay(const RunInputs& inputs, const std::vector<Request>& requests);

enum class SweepParam { CacheSize, ZipfA };

struct SweepRequest {
  SweepParam param = SweepParam::CacheSize;
  std::vector<double> values;
  std::vector<StrategyConfig> strategies;
  std::vector<std::uint64_t> seeds;
};

// One run per (value, strategy, seed), rows in that nesting order. Cells run
// concurrently; per-cell failures are reported as anomalous rows rather than
// aborting the sweep.
std::vector<MetricsReport> sweep(const RunInputs& base, const SweepRequest& request);

}  // namespace ccnsim
