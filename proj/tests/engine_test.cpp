#include "ccnsim/engine.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace ccnsim;

namespace {

struct Scenario {
  Graph graph;
  ShortestPathTable spt;
  CentralityTable centrality;
  RunInputs inputs;

  Scenario(Graph g, Placement placement, StrategyKind kind, int cache_capacity = 10) {
    graph = std::move(g);
    spt = all_pairs_shortest_paths(graph);
    if (graph.node_count >= 3) {
      centrality = compute_centrality(graph, spt, Weights{});
    } else {
      centrality.betweenness.assign(graph.node_count, 0.0);
      centrality.eigenvector = eigenvector_centrality(graph);
      centrality.weights = Weights{};
    }
    inputs.graph = &graph;
    inputs.spt = &spt;
    inputs.centrality = &centrality;
    inputs.strategy.kind = kind;
    inputs.cache_capacity = cache_capacity;
    inputs.placement = std::move(placement);
    inputs.workload.consumer_count = static_cast<int>(inputs.placement.consumers.size());
    inputs.workload.catalog_size = 100;
  }
};

}  // namespace

TEST_CASE("single request over a two-node line") {
  Scenario s(testutil::path_graph(2), Placement{{0}, 1}, StrategyKind::Lce);
  const auto report = replay(s.inputs, {{0.0, 0, 5}});
  CHECK(report.interests_issued == 1);
  CHECK(report.deliveries == 1);
  CHECK(report.cache_hits == 0);  // satisfied at the server
  CHECK(report.avg_hop_count() == doctest::Approx(1.0));
  const double expected =
      s.inputs.link.interest_hop_latency() + s.inputs.link.data_hop_latency();
  CHECK(report.avg_latency() == doctest::Approx(expected));
  CHECK(report.anomalies == 0);
}

TEST_CASE("LCE second request hits the consumer-adjacent node") {
  Scenario s(testutil::path_graph(3), Placement{{0}, 2}, StrategyKind::Lce);
  const auto report = replay(s.inputs, {{0.0, 0, 5}, {1.0, 0, 5}});
  CHECK(report.deliveries == 2);
  CHECK(report.cache_hits == 1);
  // first request: 2 hops to the server; second: 1 hop to the cached copy
  CHECK(report.hop_sum == doctest::Approx(3.0));
  CHECK(report.anomalies == 0);
}

TEST_CASE("interest aggregation satisfies both consumers from one data packet") {
  // Two consumers share node 1 on the way to the server at node 2.
  Scenario s(testutil::make_graph(4, {{0, 1}, {3, 1}, {1, 2}}), Placement{{0, 3}, 2},
             StrategyKind::Lce);
  // Second interest reaches node 1 while the first is still pending there.
  const auto report = replay(s.inputs, {{0.0, 0, 5}, {0.001, 3, 5}});
  CHECK(report.interests_issued == 2);
  CHECK(report.deliveries == 2);
  CHECK(report.anomalies == 0);
  // The aggregated interest stopped at node 1: its own path is 1 hop.
  CHECK(report.hop_sum == doctest::Approx(2.0 + 1.0));
}

TEST_CASE("latency decomposition without aggregation") {
  Scenario s(testutil::path_graph(5), Placement{{0}, 4}, StrategyKind::Lce);
  std::vector<Request> requests;
  for (int i = 0; i < 20; ++i) requests.push_back({i * 1.0, 0, (i % 7) + 1});
  const auto report = replay(s.inputs, requests);
  CHECK(report.anomalies == 0);
  const double per_round_trip_hop =
      s.inputs.link.interest_hop_latency() + s.inputs.link.data_hop_latency();
  CHECK(report.latency_sum == doctest::Approx(report.hop_sum * per_round_trip_hop));
}

TEST_CASE("runs are deterministic and conserve interests") {
  const Graph g = generate_random_graph(20, 45, 7);
  const auto spt = all_pairs_shortest_paths(g);
  const auto centrality = compute_centrality(g, spt, Weights{});
  std::mt19937_64 prng(3);
  const auto placement = place_consumers_and_server(g, 5, prng);

  for (auto kind : {StrategyKind::Nvcp, StrategyKind::Lce, StrategyKind::Prob,
                    StrategyKind::Mpc}) {
    RunInputs in;
    in.graph = &g;
    in.spt = &spt;
    in.centrality = &centrality;
    in.strategy.kind = kind;
    in.workload = {200, 0.7, 0.0, 50.0, 5, 5.0};
    in.cache_capacity = 20;
    in.seed = 99;
    in.placement = placement;

    const auto a = run(in);
    const auto b = run(in);
    CHECK(a.interests_issued == b.interests_issued);
    CHECK(a.cache_hits == b.cache_hits);
    CHECK(a.hop_sum == b.hop_sum);
    CHECK(a.latency_sum == b.latency_sum);
    CHECK(a.deliveries == a.interests_issued);  // conservation
    CHECK(a.anomalies == 0);                    // PIT drained, no orphans
    CHECK(a.hit_ratio() >= 0.0);
    CHECK(a.hit_ratio() <= 1.0);
  }
}

TEST_CASE("table-default NVCP run lands strictly inside (0,1) hit ratio") {
  const Graph g = generate_random_graph(50, 150, 42);
  const auto spt = all_pairs_shortest_paths(g);
  const auto centrality = compute_centrality(g, spt, Weights{});
  std::mt19937_64 prng(42);
  const auto placement = place_consumers_and_server(g, 18, prng);

  RunInputs in;
  in.graph = &g;
  in.spt = &spt;
  in.centrality = &centrality;
  in.strategy.kind = StrategyKind::Nvcp;
  in.workload = {1000, 0.7, 0.0, 100.0, 18, 5.0};  // shrunk catalog/duration for unit scale
  in.cache_capacity = 100;
  in.seed = 1;
  in.placement = placement;

  const auto report = run(in);
  CHECK(report.anomalies == 0);
  CHECK(report.hit_ratio() > 0.0);
  CHECK(report.hit_ratio() < 1.0);
  CHECK(report.avg_hop_count() >= 0.0);
  CHECK(report.avg_latency() > 0.0);
}

TEST_CASE("sweep cardinality and degenerate sweep") {
  const Graph g = generate_random_graph(15, 30, 2);
  const auto spt = all_pairs_shortest_paths(g);
  const auto centrality = compute_centrality(g, spt, Weights{});
  std::mt19937_64 prng(9);

  RunInputs base;
  base.graph = &g;
  base.spt = &spt;
  base.centrality = &centrality;
  base.workload = {100, 0.7, 0.0, 20.0, 3, 2.0};
  base.cache_capacity = 10;
  base.seed = 5;
  base.placement = place_consumers_and_server(g, 3, prng);

  SweepRequest req;
  req.param = SweepParam::CacheSize;
  req.values = {5, 10, 20, 40};
  req.strategies = {StrategyConfig{StrategyKind::Nvcp}, StrategyConfig{StrategyKind::Lce},
                    StrategyConfig{StrategyKind::Prob}, StrategyConfig{StrategyKind::Mpc}};
  req.seeds = {1, 2, 3};
  const auto rows = sweep(base, req);
  CHECK(rows.size() == 48);

  SweepRequest single;
  single.param = SweepParam::CacheSize;
  single.values = {10};
  single.strategies = {StrategyConfig{StrategyKind::Lce}};
  single.seeds = {base.seed};
  const auto one = sweep(base, single);
  REQUIRE(one.size() == 1);
  StrategyConfig lce{StrategyKind::Lce};
  RunInputs direct = base;
  direct.strategy = lce;
  const auto direct_report = run(direct);
  CHECK(one[0].cache_hits == direct_report.cache_hits);
  CHECK(one[0].hop_sum == direct_report.hop_sum);
  CHECK(one[0].latency_sum == direct_report.latency_sum);
}
