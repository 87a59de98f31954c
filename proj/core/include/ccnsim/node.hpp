#pragma once

#include "ccnsim/topology.hpp"

#include <cstdint>
#include <list>
#include <unordered_map>
#include <vector>

namespace ccnsim {

using ContentId = int;

enum class PacketKind { Interest, Data };

/// One in-flight interest or data packet.
struct Packet {
  PacketKind direction = PacketKind::Interest;
  ContentId content = 0;
  NodeId origin_consumer = 0;
  std::vector<NodeId> path_trace;  // nodes visited, starting at the consumer's attachment
  double issue_time = 0.0;

  int hop_count() const { return static_cast<int>(path_trace.size()) - 1; }
};

/// Fixed-capacity content cache with LRU replacement.
class ContentStore {
 public:
  explicit ContentStore(std::size_t capacity) : capacity_(capacity) {}

  // Returns true and promotes the entry to most-recently-used on a hit.
  bool touch(ContentId k);
  bool contains(ContentId k) const { return index_.count(k) != 0; }

  // Inserts k as most-recently-used, evicting the LRU entry when full.
  void insert(ContentId k);

  std::size_t size() const { return index_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::list<ContentId> order_;  // front = most recently used
  std::unordered_map<ContentId, std::list<ContentId>::iterator> index_;
};

/// One downstream interest awaiting data at a node.
struct PendingInterest {
  std::vector<NodeId> trace;  // the interest's own path up to (and including) this node
  double issue_time = 0.0;
  NodeId origin_consumer = 0;
};

/// Pending Interest Table: content id -> downstream interests.
class PitTable {
 public:
  bool has(ContentId k) const { return entries_.count(k) != 0; }
  void add(ContentId k, PendingInterest pending) { entries_[k].push_back(std::move(pending)); }

  // Removes and returns all downstream interests for k (empty if none).
  std::vector<PendingInterest> take(ContentId k);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_map<ContentId, std::vector<PendingInterest>> entries_;
};

/// Per-router state: cache, PIT and the counters feeding C_S and P.
struct NodeState {
  NodeId id = 0;
  ContentStore store;
  PitTable pit;
  std::uint64_t forward_count = 0;  // c_S: interests forwarded onward
  std::unordered_map<ContentId, std::uint64_t> request_counts;  // f_{v,k}
  std::uint64_t max_request_count = 0;                          // f_max

  NodeState(NodeId node, std::size_t cache_capacity) : id(node), store(cache_capacity) {}

  void note_request(ContentId k);
  double popularity(ContentId k) const;
};

// c_S(v) / network-wide max; 0 when no interest has been forwarded anywhere.
double connectivity(const NodeState& node, std::uint64_t network_max);

enum class InterestAction { ReturnData, Aggregate, Forward };
enum class DataAction { DeliverDownstream };
enum class CacheVerdict { Cache, Forward };

// Cache hit -> ReturnData (LRU touch, interest discarded). Pending PIT entry
// -> Aggregate (downstream recorded, not re-forwarded). Otherwise increments
// c_S and f_{v,k}, records the PIT entry and asks for a Forward.
// Throws on a malformed packet (empty path trace).
InterestAction process_interest(NodeState& node, const Packet& interest);

// Applies the cache verdict, clears the PIT entry and hands back the
// downstream interests for delivery. `downstreams_out` is overwritten.
// Returns DeliverDownstream; a missing PIT entry raises std::runtime_error
// (the engine counts it as an anomaly).
DataAction process_data(NodeState& node, const Packet& data, CacheVerdict verdict,
                        std::vector<PendingInterest>& downstreams_out);

}  // namespace ccnsim
