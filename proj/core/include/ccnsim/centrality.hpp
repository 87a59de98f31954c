#pragma once

#include "ccnsim/topology.hpp"

#include <vector>

namespace ccnsim {

/// Attribute weights for the composite node value; must sum to 1.
struct Weights {
  double alpha = 1.0 / 3.0;  // connectivity
  double beta = 1.0 / 3.0;   // betweenness centrality
  double gamma = 1.0 / 3.0;  // eigenvector centrality
};

bool weights_valid(const Weights& w, double tol = 1e-9);

/// Per-node centralities, computed once per topology.
struct CentralityTable {
  std::vector<double> betweenness;   // in [0,1]
  std::vector<double> eigenvector;   // max-normalized, in (0,1]
  Weights weights;
};

// Normalized betweenness: (2/((n-1)(n-2))) * sum over unordered pairs {s,t}
// (s,t != i) of sigma_st(i)/sigma_st. Throws for n < 3.
std::vector<double> betweenness_centrality(const Graph& g, const ShortestPathTable& spt);

// Principal eigenvector of the adjacency matrix by power iteration, max
// component normalized to 1. Iterates on A + eps*I to avoid oscillation on
// bipartite graphs. Throws if max_iter is reached without convergence.
std::vector<double> eigenvector_centrality(const Graph& g, double tol = 1e-9,
                                           int max_iter = 10000);

// Weighted node value M = alpha*c_s + beta*c_b + gamma*c_e.
// Throws when the weights do not sum to 1 within 1e-9.
double composite_value(double c_s, double c_b, double c_e, const Weights& w);

CentralityTable compute_centrality(const Graph& g, const ShortestPathTable& spt,
                                   const Weights& w);

}  // namespace ccnsim
