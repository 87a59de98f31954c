#include "ccnsim/metrics.hpp"

#include <stdexcept>

namespace ccnsim {

void record_delivery(MetricsReport& report, SatisfiedAt satisfied_at, int hops, double latency) {
  if (hops < 0 || latency < 0.0) throw std::invalid_argument("negative hops or latency");
  ++report.deliveries;
  if (satisfied_at == SatisfiedAt::Cache) ++report.cache_hits;
  report.hop_sum += hops;
  report.latency_sum += latency;
}

}  // namespace ccnsim
