#include "tmku/topk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tmku {

TopKMap::TopKMap(std::size_t capacity, Money seed)
    : capacity_(capacity), seed_(seed) {
  if (capacity_ == 0) throw std::invalid_argument("TopKMap: capacity must be >= 1");
}

void TopKMap::offer(Itemset itemset, Money utility, std::uint64_t discoveryIndex) {
  if (entries_.size() < capacity_) {
    entries_.insert({std::move(itemset), utility, discoveryIndex});
    return;
  }
  if (utility > entries_.begin()->utility) {
    entries_.insert({std::move(itemset), utility, discoveryIndex});
    entries_.erase(entries_.begin());
  }
}

std::vector<TopKMap::Entry> TopKMap::results() const {
  std::vector<Entry> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.discoveryIndex < b.discoveryIndex;
  });
  return out;
}

Money TopKMap::eta() const {
  if (!full()) return seed_;
  return std::max(seed_, entries_.begin()->utility);
}

Money riuSeed(const Database& db, const TargetPattern& target, std::size_t k) {
  if (k == 0) throw std::invalid_argument("riuSeed: k must be >= 1");
  if (!target.allKnown) return 0;

  // One scan accumulating u(T' ∪ {i}) for every i outside the target, plus
  // u(T') itself as a single candidate.
  std::map<ItemId, Money> extensionUtil;
  Money targetUtil = 0;
  for (const Transaction& t : db.transactions()) {
    Money targetInT = 0;
    std::size_t found = 0;
    for (const auto& [item, util] : t.entries) {
      if (std::binary_search(target.items.begin(), target.items.end(), item,
                             [&db](ItemId a, ItemId b) {
                               return db.order().precedes(a, b);
                             })) {
        targetInT += util;
        ++found;
      }
    }
    if (found != target.items.size()) continue;
    targetUtil += targetInT;
    for (const auto& [item, util] : t.entries) {
      if (std::find(target.items.begin(), target.items.end(), item) ==
          target.items.end()) {
        extensionUtil[item] += targetInT + util;
      }
    }
  }

  std::vector<Money> candidates;
  if (targetUtil > 0 && !target.items.empty()) candidates.push_back(targetUtil);
  for (const auto& [item, util] : extensionUtil) {
    if (util > 0) candidates.push_back(util);
  }
  if (candidates.size() < k) return 0;
  std::nth_element(candidates.begin(), candidates.begin() + (k - 1),
                   candidates.end(), std::greater<Money>());
  return candidates[k - 1];
}

}  // namespace tmku
