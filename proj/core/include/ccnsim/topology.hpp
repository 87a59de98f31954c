#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace ccnsim {

using NodeId = int;

/// Undirected simple graph over nodes 0..n-1.
struct Graph {
  int node_count = 0;
  int edge_count = 0;
  std::vector<std::vector<std::uint8_t>> adjacency;   // symmetric, zero diagonal
  std::vector<std::pair<NodeId, NodeId>> edge_list;   // each pair stored with first < second

  bool has_edge(NodeId u, NodeId v) const { return adjacency[u][v] != 0; }
  int degree(NodeId v) const;
};

/// All-pairs hop distances, shortest-path counts and per-pair next hops.
struct ShortestPathTable {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<double>> sigma;                       // number of distinct shortest paths
  std::vector<std::vector<std::vector<NodeId>>> next_hops;      // sorted ascending per (s,t)
};

// Connected simple graph with exactly n nodes and m edges, reproducible from
// the seed. Throws std::invalid_argument when m is outside [n-1, n(n-1)/2].
Graph generate_random_graph(int n, int m, std::uint64_t seed);

bool is_connected(const Graph& g);

// BFS from every source; sigma counts all distinct shortest paths.
ShortestPathTable all_pairs_shortest_paths(const Graph& g);

// Lowest-id neighbor of `current` lying on a shortest path to `destination`.
// Throws std::invalid_argument when current == destination.
NodeId route_next_hop(const ShortestPathTable& table, NodeId current, NodeId destination);

// Edge-list text format: first line "n m", then one "u v" pair per line.
void save_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list(std::istream& in);

}  // namespace ccnsim
