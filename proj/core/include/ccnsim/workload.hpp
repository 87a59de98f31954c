#pragma once

#include "ccnsim/topology.hpp"

#include <random>
#include <vector>

namespace ccnsim {

struct WorkloadConfig {
  int catalog_size = 10000;
  double zipf_a = 0.7;
  double zipf_q = 0.0;
  double lambda_per_consumer = 100.0;  // arrivals per second
  int consumer_count = 18;
  double duration = 100.0;  // seconds
};

bool workload_valid(const WorkloadConfig& cfg);

/// Zipf-Mandelbrot sampler over ranks 1..N, p(r) proportional to 1/(r+q)^a.
class ZipfMandelbrot {
 public:
  ZipfMandelbrot(int catalog_size, double a, double q);

  int sample(std::mt19937_64& rng) const;  // rank in 1..catalog_size
  double probability(int rank) const;

 private:
  std::vector<double> cumulative_;
};

// Strictly increasing arrival times in [0, duration), exponential gaps with
// mean 1/lambda.
std::vector<double> poisson_arrivals(std::mt19937_64& rng, double lambda, double duration);

struct Placement {
  std::vector<NodeId> consumers;
  NodeId server = 0;
};

// Server on a uniformly random node; consumers on the consumer_count
// lowest-degree nodes (ties by id), skipping the server's node.
// Throws when consumer_count > n - 1.
Placement place_consumers_and_server(const Graph& g, int consumer_count, std::mt19937_64& rng);

struct Request {
  double time = 0.0;
  NodeId consumer = 0;
  int content = 0;  // popularity rank; content id == rank
};

// Merged, time-ordered request trace over all consumers.
std::vector<Request> generate_requests(const WorkloadConfig& cfg, const Placement& placement,
                                       std::mt19937_64& rng);

}  // namespace ccnsim
