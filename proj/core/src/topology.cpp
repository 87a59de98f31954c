#include "ccnsim/topology.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <stdexcept>

namespace ccnsim {

int Graph::degree(NodeId v) const {
  int d = 0;
  for (NodeId u = 0; u < node_count; ++u) d += adjacency[v][u];
  return d;
}

namespace {

void add_edge(Graph& g, NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  g.adjacency[u][v] = 1;
  g.adjacency[v][u] = 1;
  g.edge_list.emplace_back(u, v);
}

}  // namespace

Graph generate_random_graph(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("graph needs at least 2 nodes");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    throw std::invalid_argument("edge count outside [n-1, n(n-1)/2]");

  std::mt19937_64 rng(seed);
  Graph g;
  g.node_count = n;
  g.edge_count = m;
  g.adjacency.assign(n, std::vector<std::uint8_t>(n, 0));
  g.edge_list.reserve(m);

  // Random spanning tree: shuffle node order, attach each to an earlier one.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    add_edge(g, order[i], order[pick(rng)]);
  }

  // Remaining edges sampled uniformly without replacement from non-edges.
  std::vector<std::pair<NodeId, NodeId>> non_edges;
  non_edges.reserve(static_cast<std::size_t>(max_edges) - (n - 1));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  for (int extra = m - (n - 1); extra > 0; --extra) {
    std::uniform_int_distribution<std::size_t> pick(0, non_edges.size() - 1);
    const std::size_t i = pick(rng);
    add_edge(g, non_edges[i].first, non_edges[i].second);
    non_edges[i] = non_edges.back();
    non_edges.pop_back();
  }
  std::sort(g.edge_list.begin(), g.edge_list.end());
  return g;
}

bool is_connected(const Graph& g) {
  if (g.node_count == 0) return false;
  std::vector<char> seen(g.node_count, 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId u = 0; u < g.node_count; ++u) {
      if (g.adjacency[v][u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == g.node_count;
}

ShortestPathTable all_pairs_shortest_paths(const Graph& g) {
  const int n = g.node_count;
  ShortestPathTable t;
  t.dist.assign(n, std::vector<int>(n, -1));
  t.sigma.assign(n, std::vector<double>(n, 0.0));
  t.next_hops.assign(n, std::vector<std::vector<NodeId>>(n));

  for (NodeId s = 0; s < n; ++s) {
    auto& dist = t.dist[s];
    auto& sigma = t.sigma[s];
    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<NodeId> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (NodeId u = 0; u < n; ++u) {
        if (!g.adjacency[v][u]) continue;
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          frontier.push(u);
        }
        if (dist[u] == dist[v] + 1) sigma[u] += sigma[v];
      }
    }
  }

  for (NodeId s = 0; s < n; ++s)
    for (NodeId d = 0; d < n; ++d) {
      if (s == d || t.dist[s][d] < 0) continue;
      for (NodeId h = 0; h < n; ++h)
        if (g.adjacency[s][h] && t.dist[h][d] == t.dist[s][d] - 1)
          t.next_hops[s][d].push_back(h);
    }
  return t;
}

NodeId route_next_hop(const ShortestPathTable& table, NodeId current, NodeId destination) {
  if (current == destination)
    throw std::invalid_argument("route_next_hop: already at destination");
  const auto& hops = table.next_hops[current][destination];
  if (hops.empty()) throw std::invalid_argument("route_next_hop: unreachable destination");
  return hops.front();  // sorted ascending; lowest node id wins ties
}

void save_edge_list(const Graph& g, std::ostream& out) {
  out << g.node_count << ' ' << g.edge_count << '\n';
  for (const auto& [u, v] : g.edge_list) out << u << ' ' << v << '\n';
}

Graph load_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0)
    throw std::runtime_error("bad edge-list header");
  Graph g;
  g.node_count = n;
  g.edge_count = m;
  g.adjacency.assign(n, std::vector<std::uint8_t>(n, 0));
  g.edge_list.reserve(m);
  for (int i = 0; i < m; ++i) {
    NodeId u, v;
    if (!(in >> u >> v)) throw std::runtime_error("truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v || g.has_edge(u, v))
      throw std::runtime_error("invalid edge in edge list");
    add_edge(g, u, v);
  }
  std::sort(g.edge_list.begin(), g.edge_list.end());
  return g;
}

}  // namespace ccnsim
