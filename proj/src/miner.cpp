#include "tmku/miner.hpp"

#include <algorithm>
#include <vector>

namespace tmku {

namespace {

class Search {
 public:
  Search(const Database& db, Money minUtil, const HuiSink& sink,
         StrategyToggles toggles)
      : db_(db), minUtil_(minUtil), sink_(sink), toggles_(toggles) {}

  MineStats run(std::vector<UtilityList> initial) {
    for (const UtilityList& list : initial) stats_.liveListEntries += list.entries.size();
    stats_.peakListEntries = stats_.liveListEntries;
    explore(nullptr, initial);
    return stats_;
  }

 private:
  void explore(const UtilityList* prefix, const std::vector<UtilityList>& lists) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      const UtilityList& x = lists[i];
      ++stats_.candidates.visited;
      path_.push_back({x.lastItem(), x.sumIu, x.sumRu, db_.twu(x.lastItem())});
      if (x.sumIu >= minUtil_) {
        ++stats_.emitted;
        sink_(std::span<const PathUtility>(path_));
      }
      bool expand = !toggles_.ruPrune || x.sumIu + x.sumRu >= minUtil_;
      if (expand && !x.entries.empty() && i + 1 < lists.size()) {
        std::vector<UtilityList> extensions;
        for (std::size_t j = i + 1; j < lists.size(); ++j) {
          UtilityList joined = joinLists(prefix, x, lists[j]);
          if (joined.entries.empty()) continue;  // occurs nowhere, dead branch
          stats_.liveListEntries += joined.entries.size();
          extensions.push_back(std::move(joined));
        }
        stats_.peakListEntries = std::max(stats_.peakListEntries, stats_.liveListEntries);
        if (!extensions.empty()) explore(&x, extensions);
        for (const UtilityList& e : extensions) stats_.liveListEntries -= e.entries.size();
      }
      path_.pop_back();
    }
  }

  const Database& db_;
  Money minUtil_;
  const HuiSink& sink_;
  StrategyToggles toggles_;
  MineStats stats_;
  std::vector<PathUtility> path_;
};

}  // namespace

MineStats mine(const Database& db, Money minUtil, const HuiSink& sink,
               StrategyToggles toggles, const ProcessingOrder* order) {
  std::vector<UtilityList> initial =
      buildInitialLists(db, minUtil, toggles.twuPrune, order);
  Search search(db, minUtil, sink, toggles);
  return search.run(std::move(initial));
}

}  // namespace tmku
