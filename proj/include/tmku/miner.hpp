#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "tmku/database.hpp"
#include "tmku/utility_list.hpp"

namespace tmku {

// Search-space pruning toggles. Threshold raising (SUR/RIU) is always on;
// these control the ablation variants only.
struct StrategyToggles {
  bool twuPrune = true;      // drop items whose TWU is below the threshold
  bool ruPrune = true;       // stop extending when sumIu + sumRu falls below it
  bool twuTargetMatch = true;  // TWU-guided bottom-up target matching in queries

  static StrategyToggles full() { return {}; }
  static StrategyToggles v1() { return {true, false, true}; }
  static StrategyToggles v2() { return {false, true, true}; }
};

struct CandidateCounter {
  // Search-tree itemsets whose evaluation began; nondecreasing within a run.
  std::uint64_t visited = 0;
};

struct MineStats {
  CandidateCounter candidates;
  std::uint64_t emitted = 0;
  // Allocation-tracking estimate inputs: utility-list entries live on the
  // search path right now / at the high-water mark.
  std::size_t liveListEntries = 0;
  std::size_t peakListEntries = 0;
};

// One step of the search path for an emitted itemset: the item plus the
// utility data of the path prefix ending at it. sumIu/sumRu belong to the
// whole prefix itemset, twu to the item itself.
struct PathUtility {
  ItemId item = 0;
  Money sumIu = 0;
  Money sumRu = 0;
  Money twu = 0;
};

// Receives one call per discovered high-utility itemset. The span covers the
// whole itemset in processing order, one PathUtility per prefix depth; it is
// only valid during the call.
using HuiSink = std::function<void(std::span<const PathUtility>)>;

// Depth-first utility-list search over ascending-TWU extensions. Emits every
// itemset whose exact utility reaches minUtil; recursion into extensions is
// gated by sumIu + sumRu when toggles.ruPrune is set, unconditional otherwise.
// Itemsets that occur in no transaction are never expanded or counted. An
// explicit order (tests only) overrides the database's ascending-TWU order.
MineStats mine(const Database& db, Money minUtil, const HuiSink& sink,
               StrategyToggles toggles = {}, const ProcessingOrder* order = nullptr);

}  // namespace tmku
