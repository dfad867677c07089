#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "tmku/database.hpp"
#include "tmku/target_query.hpp"

namespace tmku {

// Bounded best-k collection driving the dynamic selection threshold.
// Admission is pure size-up-racing: anything enters while under capacity;
// once full, an offer must strictly beat the current minimum utility, which
// evicts the weakest entry (ties evicted latest-discovered-first, so the
// earliest discoveries survive). eta() starts at the seed and, once the map
// is full, tracks the k-th best utility; it never decreases.
class TopKMap {
 public:
  struct Entry {
    Itemset itemset;  // path (ascending-TWU) order as discovered
    Money utility = 0;
    std::uint64_t discoveryIndex = 0;
  };

  explicit TopKMap(std::size_t capacity, Money seed = 0);

  void offer(Itemset itemset, Money utility, std::uint64_t discoveryIndex);

  // Entries sorted by utility descending, ties by discovery order.
  std::vector<Entry> results() const;

  Money eta() const;
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return entries_.size() == capacity_; }

 private:
  struct EvictionOrder {
    // Weakest first: lowest utility, then latest discovery.
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.utility != b.utility) return a.utility < b.utility;
      return a.discoveryIndex > b.discoveryIndex;
    }
  };

  std::size_t capacity_;
  Money seed_;
  std::multiset<Entry, EvictionOrder> entries_;
};

// RIU threshold seeding: the k-th largest among the real utilities of the
// target's single-item extensions (the target itself counts once). Every
// candidate is the exact utility of a concrete target-containing itemset, so
// the returned value is a sound starting threshold; 0 when fewer than k
// positive candidates exist.
Money riuSeed(const Database& db, const TargetPattern& target, std::size_t k);

}  // namespace tmku
