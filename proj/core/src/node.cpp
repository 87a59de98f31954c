#include "ccnsim/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccnsim {

bool ContentStore::touch(ContentId k) {
  auto it = index_.find(k);
  if (it == index_.end()) return false;
  order_.splice(order_.begin(), order_, it->second);
  return true;
}

void ContentStore::insert(ContentId k) {
  if (capacity_ == 0) return;
  if (touch(k)) return;
  if (index_.size() == capacity_) {
    index_.erase(order_.back());
    order_.pop_back();
  }
  order_.push_front(k);
  index_[k] = order_.begin();
}

std::vector<PendingInterest> PitTable::take(ContentId k) {
  auto it = entries_.find(k);
  if (it == entries_.end()) return {};
  std::vector<PendingInterest> out = std::move(it->second);
  entries_.erase(it);
  return out;
}

void NodeState::note_request(ContentId k) {
  const std::uint64_t count = ++request_counts[k];
  max_request_count = std::max(max_request_count, count);
}

double NodeState::popularity(ContentId k) const {
  if (max_request_count == 0) return 0.0;
  auto it = request_counts.find(k);
  if (it == request_counts.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(max_request_count);
}

double connectivity(const NodeState& node, std::uint64_t network_max) {
  if (network_max == 0) return 0.0;
  return static_cast<double>(node.forward_count) / static_cast<double>(network_max);
}

InterestAction process_interest(NodeState& node, const Packet& interest) {
  if (interest.path_trace.empty())
    throw std::invalid_argument("interest packet with empty path trace");
  if (node.store.touch(interest.content)) return InterestAction::ReturnData;

  PendingInterest pending{interest.path_trace, interest.issue_time, interest.origin_consumer};
  if (node.pit.has(interest.content)) {
    node.pit.add(interest.content, std::move(pending));
    return InterestAction::Aggregate;
  }
  ++node.forward_count;
  node.note_request(interest.content);
  node.pit.add(interest.content, std::move(pending));
  return InterestAction::Forward;
}

DataAction process_data(NodeState& node, const Packet& data, CacheVerdict verdict,
                        std::vector<PendingInterest>& downstreams_out) {
  downstreams_out = node.pit.take(data.content);
  if (downstreams_out.empty())
    throw std::runtime_error("data packet with no matching PIT entry");
  if (verdict == CacheVerdict::Cache) node.store.insert(data.content);
  return DataAction::DeliverDownstream;
}

}  // namespace ccnsim
