#include "ccnsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccnsim {

bool workload_valid(const WorkloadConfig& cfg) {
  return cfg.catalog_size >= 1 && cfg.zipf_a >= 0.0 && cfg.zipf_q >= 0.0 &&
         cfg.lambda_per_consumer > 0.0 && cfg.consumer_count >= 1 && cfg.duration >= 0.0;
}

ZipfMandelbrot::ZipfMandelbrot(int catalog_size, double a, double q) {
  if (catalog_size < 1) throw std::invalid_argument("catalog_size must be >= 1");
  if (a < 0.0 || q < 0.0) throw std::invalid_argument("zipf parameters must be >= 0");
  cumulative_.resize(catalog_size);
  double total = 0.0;
  for (int r = 1; r <= catalog_size; ++r) {
    total += std::pow(static_cast<double>(r) + q, -a);
    cumulative_[r - 1] = total;
  }
  for (double& c : cumulative_) c /= total;
  cumulative_.back() = 1.0;
}

int ZipfMandelbrot::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<int>(it - cumulative_.begin()) + 1;
}

double ZipfMandelbrot::probability(int rank) const {
  if (rank < 1 || rank > static_cast<int>(cumulative_.size()))
    throw std::out_of_range("rank outside catalog");
  if (rank == 1) return cumulative_[0];
  return cumulative_[rank - 1] - cumulative_[rank - 2];
}

std::vector<double> poisson_arrivals(std::mt19937_64& rng, double lambda, double duration) {
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  std::exponential_distribution<double> gap(lambda);
  std::vector<double> times;
  for (double t = gap(rng); t < duration; t += gap(rng)) times.push_back(t);
  return times;
}

Placement place_consumers_and_server(const Graph& g, int consumer_count, std::mt19937_64& rng) {
  if (consumer_count < 1 || consumer_count > g.node_count - 1)
    throw std::invalid_argument("consumer_count must be in [1, n-1]");

  Placement p;
  std::uniform_int_distribution<NodeId> pick(0, g.node_count - 1);
  p.server = pick(rng);

  // "Edge nodes": lowest degree first, ties by node id.
  std::vector<NodeId> by_degree;
  for (NodeId v = 0; v < g.node_count; ++v)
    if (v != p.server) by_degree.push_back(v);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&g](NodeId a, NodeId b) { return g.degree(a) < g.degree(b); });
  p.consumers.assign(by_degree.begin(), by_degree.begin() + consumer_count);
  return p;
}

std::vector<Request> generate_requests(const WorkloadConfig& cfg, const Placement& placement,
                                       std::mt19937_64& rng) {
  if (!workload_valid(cfg)) throw std::invalid_argument("invalid workload config");
  if (static_cast<int>(placement.consumers.size()) != cfg.consumer_count)
    throw std::invalid_argument("placement does not match consumer_count");

  const ZipfMandelbrot zipf(cfg.catalog_size, cfg.zipf_a, cfg.zipf_q);
  std::vector<Request> requests;
  for (NodeId consumer : placement.consumers) {
    for (double t : poisson_arrivals(rng, cfg.lambda_per_consumer, cfg.duration))
      requests.push_back({t, consumer, zipf.sample(rng)});
  }
  std::stable_sort(requests.begin(), requests.end(),
                   [](const Request& a, const Request& b) { return a.time < b.time; });
  return requests;
}

}  // namespace ccnsim
