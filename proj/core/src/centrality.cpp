#include "ccnsim/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccnsim {

bool weights_valid(const Weights& w, double tol) {
  if (w.alpha < 0.0 || w.beta < 0.0 || w.gamma < 0.0) return false;
  return std::abs(w.alpha + w.beta + w.gamma - 1.0) <= tol;
}

std::vector<double> betweenness_centrality(const Graph& g, const ShortestPathTable& spt) {
  const int n = g.node_count;
  if (n < 3) throw std::invalid_argument("betweenness needs n >= 3");
  const double norm = 2.0 / (static_cast<double>(n - 1) * (n - 2));
  std::vector<double> cb(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    double sum = 0.0;
    for (NodeId s = 0; s < n; ++s) {
      if (s == i) continue;
      for (NodeId t = s + 1; t < n; ++t) {
        if (t == i) continue;
        // i lies on a shortest s-t path iff the distances compose
        if (spt.dist[s][i] + spt.dist[i][t] != spt.dist[s][t]) continue;
        sum += spt.sigma[s][i] * spt.sigma[i][t] / spt.sigma[s][t];
      }
    }
    cb[i] = norm * sum;
  }
  return cb;
}

std::vector<double> eigenvector_centrality(const Graph& g, double tol, int max_iter) {
  if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
  const int n = g.node_count;
  // Iterate on A + I: same principal eigenvector, and the shift separates the
  // +/-lambda pair of bipartite graphs so the iteration actually converges.
  const double damping = 1.0;
  std::vector<double> x(n, 1.0), next(n, 0.0);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (NodeId i = 0; i < n; ++i) {
      double acc = damping * x[i];
      for (NodeId j = 0; j < n; ++j)
        if (g.adjacency[i][j]) acc += x[j];
      next[i] = acc;
    }
    const double peak = *std::max_element(next.begin(), next.end());
    if (peak <= 0.0) throw std::runtime_error("eigenvector iteration collapsed");
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      next[i] /= peak;
      delta = std::max(delta, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (delta < tol) return x;
  }
  throw std::runtime_error("eigenvector centrality did not converge");
}

double composite_value(double c_s, double c_b, double c_e, const Weights& w) {
  if (!weights_valid(w)) throw std::invalid_argument("weights must be >= 0 and sum to 1");
  return w.alpha * c_s + w.beta * c_b + w.gamma * c_e;
}

CentralityTable compute_centrality(const Graph& g, const ShortestPathTable& spt,
                                   const Weights& w) {
  if (!weights_valid(w)) throw std::invalid_argument("weights must be >= 0 and sum to 1");
  CentralityTable t;
  t.betweenness = betweenness_centrality(g, spt);
  t.eigenvector = eigenvector_centrality(g);
  t.weights = w;
  return t;
}

}  // namespace ccnsim
