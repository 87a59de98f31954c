// Batch front end: single runs or parameter sweeps, CSV results.

#include "ccnsim/engine.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliConfig {
  int nodes = 50;
  int links = 150;
  double delay_ms = 10.0;
  double bandwidth_mbps = 10.0;
  int contents = 10000;
  int consumers = 18;
  int cache_size = 1000;
  double zipf_a = 0.7;
  double zipf_q = 0.0;
  double lambda = 100.0;
  double duration = 100.0;
  std::string strategy = "nvcp";
  double prob_p = 0.5;
  double mpc_threshold = 0.5;
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double gamma = 1.0 / 3.0;
  std::uint64_t seed = 42;
  int seeds = 1;
  std::string sweep_param;
  std::string sweep_values;
  std::string out_path;
  std::string trace_path;
  std::string graph_path;       // load topology instead of generating
  std::string dump_graph_path;  // save generated topology
  bool dump_centrality = false;
  bool allow_out_of_range = false;
};

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<ccnsim::MetricsReport>& reports) {
  out << "strategy,cache_size,zipf_a,seed,interests,hit_ratio,avg_hops,avg_latency_s\n";
  for (const auto& r : reports) {
    out << r.strategy_label << ',' << r.cache_size << ',' << format_real(r.zipf_a) << ','
        << r.seed << ',' << r.interests_issued << ',' << format_real(r.hit_ratio()) << ','
        << format_real(r.avg_hop_count()) << ',' << format_real(r.avg_latency()) << '\n';
  }
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Cache-placement simulator for content-centric networks"};
  app.set_config("--config", "", "Flat key=value config file; flags override file values");
  app.allow_config_extras(false);

  app.add_option("--nodes", cfg.nodes, "Topology node count");
  app.add_option("--links", cfg.links, "Topology link count");
  app.add_option("--delay-ms", cfg.delay_ms, "Per-hop propagation delay (ms)");
  app.add_option("--bandwidth-mbps", cfg.bandwidth_mbps, "Link bandwidth (Mbps)");
  app.add_option("--contents", cfg.contents, "Catalog size");
  app.add_option("--consumers", cfg.consumers, "Consumer count");
  app.add_option("--cache-size", cfg.cache_size, "Content Store capacity per node");
  app.add_option("--zipf-a", cfg.zipf_a, "Zipf-Mandelbrot exponent");
  app.add_option("--zipf-q", cfg.zipf_q, "Zipf-Mandelbrot shift");
  app.add_option("--lambda", cfg.lambda, "Interest rate per consumer (1/s)");
  app.add_option("--duration", cfg.duration, "Arrival window (s)");
  app.add_option("--strategy", cfg.strategy, "Cache strategy")
      ->check(CLI::IsMember({"nvcp", "lce", "prob", "mpc"}));
  app.add_option("--prob-p", cfg.prob_p, "Prob: cache probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--mpc-threshold", cfg.mpc_threshold, "MPC: popularity threshold")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--alpha", cfg.alpha, "Weight of connectivity");
  app.add_option("--beta", cfg.beta, "Weight of betweenness centrality");
  app.add_option("--gamma", cfg.gamma, "Weight of eigenvector centrality");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "Base RNG seed");
  app.add_option("--seeds", cfg.seeds, "Number of consecutive seeds to run")
      ->check(CLI::PositiveNumber);
  app.add_option("--sweep", cfg.sweep_param, "Parameter to sweep")
      ->check(CLI::IsMember({"cache_size", "zipf_a"}));
  app.add_option("--sweep-values", cfg.sweep_values, "Comma-separated sweep values");
  app.add_option("--out", cfg.out_path, "Write results CSV here (default stdout)");
  app.add_option("--dump-trace", cfg.trace_path, "Write the request trace CSV here");
  app.add_option("--graph", cfg.graph_path, "Load topology from an edge-list file");
  app.add_option("--dump-graph", cfg.dump_graph_path, "Save the topology as an edge-list file");
  app.add_flag("--dump-centrality", cfg.dump_centrality, "Print per-node centralities");
  app.add_flag("--allow-out-of-range", cfg.allow_out_of_range,
               "Accept parameters outside the documented variation ranges");

  CLI11_PARSE(app, argc, argv);

  try {
    if (seed_opt->count() == 0) {
      if (const char* env_seed = std::getenv("CCNSIM_SEED")) cfg.seed = std::stoull(env_seed);
    }
    if (!cfg.allow_out_of_range) {
      auto check_zipf = [](double a) {
        if (a < 0.1 || a > 1.0)
          throw CLI::ValidationError(
              "--zipf-a", "value " + std::to_string(a) +
                              " outside variation range 0.1~1.0 (use --allow-out-of-range)");
      };
      check_zipf(cfg.zipf_a);
      if (cfg.sweep_param == "zipf_a")
        for (double v : parse_values(cfg.sweep_values)) check_zipf(v);
      if (cfg.cache_size < 1)
        throw CLI::ValidationError("--cache-size", "must be >= 1");
    }

    ccnsim::Graph graph;
    if (!cfg.graph_path.empty()) {
      std::ifstream in(cfg.graph_path);
      if (!in) throw std::runtime_error("cannot open graph file: " + cfg.graph_path);
      graph = ccnsim::load_edge_list(in);
      if (!ccnsim::is_connected(graph))
        throw std::runtime_error("loaded graph is not connected: " + cfg.graph_path);
    } else {
      graph = ccnsim::generate_random_graph(cfg.nodes, cfg.links, cfg.seed);
    }
    if (!cfg.dump_graph_path.empty()) {
      std::ofstream out(cfg.dump_graph_path);
      if (!out) throw std::runtime_error("cannot write graph file: " + cfg.dump_graph_path);
      ccnsim::save_edge_list(graph, out);
    }

    const auto spt = ccnsim::all_pairs_shortest_paths(graph);
    const ccnsim::Weights weights{cfg.alpha, cfg.beta, cfg.gamma};
    const auto centrality = ccnsim::compute_centrality(graph, spt, weights);

    if (cfg.dump_centrality) {
      std::cout << "node,betweenness,eigenvector\n";
      for (ccnsim::NodeId v = 0; v < graph.node_count; ++v)
        std::cout << v << ',' << format_real(centrality.betweenness[v]) << ','
                  << format_real(centrality.eigenvector[v]) << '\n';
    }

    ccnsim::RunInputs base;
    base.graph = &graph;
    base.spt = &spt;
    base.centrality = &centrality;
    base.strategy.kind = ccnsim::strategy_from_name(cfg.strategy);
    base.strategy.prob_p = cfg.prob_p;
    base.strategy.mpc_threshold = cfg.mpc_threshold;
    base.strategy.weights = weights;
    base.workload.catalog_size = cfg.contents;
    base.workload.zipf_a = cfg.zipf_a;
    base.workload.zipf_q = cfg.zipf_q;
    base.workload.lambda_per_consumer = cfg.lambda;
    base.workload.consumer_count = cfg.consumers;
    base.workload.duration = cfg.duration;
    base.link.per_hop_delay = cfg.delay_ms / 1000.0;
    base.link.bandwidth_bps = cfg.bandwidth_mbps * 1e6;
    base.cache_capacity = cfg.cache_size;
    base.seed = cfg.seed;
    std::mt19937_64 placement_rng(cfg.seed ^ 0xc2b2ae3d27d4eb4fULL);
    base.placement = ccnsim::place_consumers_and_server(graph, cfg.consumers, placement_rng);

    ccnsim::SweepRequest sweep_request;
    sweep_request.strategies = {base.strategy};
    for (int i = 0; i < cfg.seeds; ++i) sweep_request.seeds.push_back(cfg.seed + i);
    if (cfg.sweep_param.empty()) {
      sweep_request.param = ccnsim::SweepParam::CacheSize;
      sweep_request.values = {static_cast<double>(cfg.cache_size)};
    } else {
      sweep_request.param = cfg.sweep_param == "cache_size" ? ccnsim::SweepParam::CacheSize
                                                            : ccnsim::SweepParam::ZipfA;
      sweep_request.values = parse_values(cfg.sweep_values);
      if (sweep_request.values.empty())
        throw CLI::ValidationError("--sweep-values", "sweep requested without values");
    }

    if (!cfg.trace_path.empty()) {
      // The first cell's trace, regenerated exactly as the engine draws it.
      ccnsim::WorkloadConfig wl = base.workload;
      if (sweep_request.param == ccnsim::SweepParam::ZipfA) wl.zipf_a = sweep_request.values[0];
      std::mt19937_64 trace_rng(sweep_request.seeds[0]);
      std::ofstream trace(cfg.trace_path);
      if (!trace) throw std::runtime_error("cannot write trace file: " + cfg.trace_path);
      trace << "time_s,consumer_node,content_rank\n";
      for (const auto& r : ccnsim::generate_requests(wl, base.placement, trace_rng))
        trace << format_real(r.time) << ',' << r.consumer << ',' << r.content << '\n';
    }

    const auto reports = ccnsim::sweep(base, sweep_request);

    if (cfg.out_path.empty()) {
      write_csv(std::cout, reports);
    } else {
      std::ofstream out(cfg.out_path);
      if (!out) throw std::runtime_error("cannot write results file: " + cfg.out_path);
      write_csv(out, reports);
    }

    std::uint64_t anomalies = 0;
    for (const auto& r : reports) anomalies += r.anomalies;
    if (anomalies > 0) {
      std::cerr << "error: " << anomalies << " anomalies across " << reports.size()
                << " runs\n";
      return 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
