#include "ccnsim/engine.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <string>
#include <stdexcept>

namespace ccnsim {

namespace {

struct Event {
  double time = 0.0;
  std::uint64_t seq = 0;  // tie-break for determinism
  Packet packet;
  NodeId node = 0;
  std::size_t trace_pos = 0;            // data packets: index into path_trace
  SatisfiedAt source = SatisfiedAt::Server;  // data packets: where the content came from
};

struct LaterEvent {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

class Simulation {
 public:
  explicit Simulation(const RunInputs& in)
      : in_(in),
        prob_rng_(in.seed ^ 0x9e3779b97f4a7c15ULL) {
    const int n = in.graph->node_count;
    nodes_.reserve(n);
    for (NodeId v = 0; v < n; ++v)
      nodes_.emplace_back(v, static_cast<std::size_t>(in.cache_capacity));
  }

  MetricsReport execute(const std::vector<Request>& requests) {
    report_.strategy_label = strategy_name(in_.strategy.kind);
    report_.cache_size = in_.cache_capacity;
    report_.zipf_a = in_.workload.zipf_a;
    report_.seed = in_.seed;
    report_.interests_issued = requests.size();

    for (const Request& r : requests) {
      Event e;
      e.time = r.time;
      e.seq = next_seq_++;
      e.packet.direction = PacketKind::Interest;
      e.packet.content = r.content;
      e.packet.origin_consumer = r.consumer;
      e.packet.path_trace = {r.consumer};
      e.packet.issue_time = r.time;
      e.node = r.consumer;
      queue_.push(std::move(e));
    }

    while (!queue_.empty()) {
      Event e = queue_.top();
      queue_.pop();
      if (e.packet.direction == PacketKind::Interest)
        handle_interest(std::move(e));
      else
        handle_data(std::move(e));
    }

    for (const NodeState& node : nodes_) {
      report_.anomalies += node.pit.size();  // leaks
      if (node.store.size() > node.store.capacity()) ++report_.anomalies;
    }
    if (report_.deliveries != report_.interests_issued) ++report_.anomalies;
    return report_;
  }

 private:
  void handle_interest(Event e) {
    const NodeId v = e.node;
    if (v == in_.placement.server) {
      spawn_data(e.packet.path_trace, e.packet, SatisfiedAt::Server, e.time);
      return;
    }
    switch (process_interest(nodes_[v], e.packet)) {
      case InterestAction::ReturnData:
        spawn_data(e.packet.path_trace, e.packet, SatisfiedAt::Cache, e.time);
        break;
      case InterestAction::Aggregate:
        break;
      case InterestAction::Forward: {
        const NodeId next = route_next_hop(*in_.spt, v, in_.placement.server);
        Event fwd;
        fwd.time = e.time + in_.link.interest_hop_latency();
        fwd.seq = next_seq_++;
        fwd.packet = std::move(e.packet);
        fwd.packet.path_trace.push_back(next);
        fwd.node = next;
        queue_.push(std::move(fwd));
        break;
      }
    }
  }

  // Starts a data packet at the back of `interest_trace`, walking it in
  // reverse toward the consumer.
  void spawn_data(const std::vector<NodeId>& interest_trace, const Packet& interest,
                  SatisfiedAt source, double now) {
    Packet data;
    data.direction = PacketKind::Data;
    data.content = interest.content;
    data.origin_consumer = interest.origin_consumer;
    data.path_trace.assign(interest_trace.rbegin(), interest_trace.rend());
    data.issue_time = interest.issue_time;

    if (data.path_trace.size() == 1) {  // satisfied at the consumer's own node
      record_delivery(report_, source, 0, now - data.issue_time);
      return;
    }
    Event e;
    e.time = now + in_.link.data_hop_latency();
    e.seq = next_seq_++;
    e.node = data.path_trace[1];
    e.trace_pos = 1;
    e.source = source;
    e.packet = std::move(data);
    queue_.push(std::move(e));
  }

  CacheVerdict decide(NodeId v, ContentId k) {
    switch (in_.strategy.kind) {
      case StrategyKind::Lce:
        return lce_decide();
      case StrategyKind::Prob:
        return prob_decide(prob_rng_, in_.strategy.prob_p);
      case StrategyKind::Mpc:
        return mpc_decide(nodes_[v].popularity(k), in_.strategy.mpc_threshold);
      case StrategyKind::Nvcp: {
        // Connectivity is normalized against the node's own forwarding
        // maximum, so it saturates to 1 once the node has forwarded anything.
        const double cs = connectivity(nodes_[v], nodes_[v].forward_count);
        const double value =
            composite_value(cs, in_.centrality->betweenness[v],
                            in_.centrality->eigenvector[v], in_.strategy.weights);
        return nvcp_decide(nodes_[v].popularity(k), value);
      }
    }
    return CacheVerdict::Forward;
  }

  void handle_data(Event e) {
    const NodeId v = e.node;
    const bool is_delivery_node = e.trace_pos + 1 == e.packet.path_trace.size();
    // Admission runs while forwarding toward the consumer; the delivery node
    // has no next hop and only consumes its PIT entry.
    const CacheVerdict verdict =
        is_delivery_node ? CacheVerdict::Forward : decide(v, e.packet.content);
    std::vector<PendingInterest> downstreams;
    try {
      process_data(nodes_[v], e.packet, verdict, downstreams);
    } catch (const std::runtime_error&) {
      ++report_.anomalies;  // orphan data
      return;
    }

    // The first PIT record is the interest this data answers; the rest were
    // aggregated here and get their own copies down their recorded traces.
    for (std::size_t i = 1; i < downstreams.size(); ++i) {
      const PendingInterest& d = downstreams[i];
      Packet agg;
      agg.content = e.packet.content;
      agg.origin_consumer = d.origin_consumer;
      agg.issue_time = d.issue_time;
      spawn_data(d.trace, agg, e.source, e.time);
    }

    if (is_delivery_node) {
      record_delivery(report_, e.source, e.packet.hop_count(), e.time - e.packet.issue_time);
      return;
    }
    Event next = std::move(e);
    next.time += in_.link.data_hop_latency();
    next.seq = next_seq_++;
    ++next.trace_pos;
    next.node = next.packet.path_trace[next.trace_pos];
    queue_.push(std::move(next));
  }

  const RunInputs& in_;
  std::vector<NodeState> nodes_;
  std::mt19937_64 prob_rng_;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, LaterEvent> queue_;
  MetricsReport report_;
};

}  // namespace

namespace {

void validate_inputs(const RunInputs& inputs) {
  if (!inputs.graph || !inputs.spt || !inputs.centrality)
    throw std::invalid_argument("run: missing topology or centrality inputs");
  if (inputs.cache_capacity < 1) throw std::invalid_argument("cache_capacity must be >= 1");
  if (!workload_valid(inputs.workload)) throw std::invalid_argument("invalid workload config");
}

}  // namespace

MetricsReport run(const RunInputs& inputs, std::vector<Request>* trace_out) {
  validate_inputs(inputs);
  std::mt19937_64 workload_rng(inputs.seed);
  const auto requests = generate_requests(inputs.workload, inputs.placement, workload_rng);
  if (trace_out) *trace_out = requests;
  return Simulation(inputs).execute(requests);
}

MetricsReport replay(const RunInputs& inputs, const std::vector<Request>& requests) {
  validate_inputs(inputs);
  return Simulation(inputs).execute(requests);
}

std::vector<MetricsReport> sweep(const RunInputs& base, const SweepRequest& request) {
  if (request.values.empty() || request.strategies.empty() || request.seeds.empty())
    throw std::invalid_argument("sweep: values, strategies and seeds must be nonempty");

  std::vector<RunInputs> cells;
  for (double value : request.values)
    for (const StrategyConfig& strategy : request.strategies)
      for (std::uint64_t seed : request.seeds) {
        RunInputs cell = base;
        cell.strategy = strategy;
        cell.seed = seed;
        if (request.param == SweepParam::CacheSize)
          cell.cache_capacity = static_cast<int>(value);
        else
          cell.workload.zipf_a = value;
        cells.push_back(std::move(cell));
      }

  std::vector<std::future<MetricsReport>> futures;
  futures.reserve(cells.size());
  for (const RunInputs& cell : cells)
    futures.push_back(std::async(std::launch::async, [&cell]() { return run(cell); }));

  std::vector<MetricsReport> reports;
  reports.reserve(cells.size());
  for (std::size_t i = 0; i < futures.size(); ++i) {
    try {
      reports.push_back(futures[i].get());
    } catch (const std::exception&) {
      MetricsReport failed;
      failed.strategy_label = strategy_name(cells[i].strategy.kind);
      failed.cache_size = cells[i].cache_capacity;
      failed.zipf_a = cells[i].workload.zipf_a;
      failed.seed = cells[i].seed;
      failed.anomalies = 1;
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

}  // namespace ccnsim
