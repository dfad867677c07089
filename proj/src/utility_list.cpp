#include "tmku/utility_list.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tmku {

std::vector<UtilityList> buildInitialLists(const Database& db, Money minUtil,
                                           bool twuPrune,
                                           const ProcessingOrder* order) {
  const ProcessingOrder& ord = order ? *order : db.order();

  std::unordered_map<ItemId, std::size_t> slot;
  std::vector<UtilityList> lists;
  for (ItemId item : ord.items) {
    if (twuPrune && db.twu(item) < minUtil) continue;
    slot[item] = lists.size();
    UtilityList list;
    list.itemset = {item};
    lists.push_back(std::move(list));
  }

  std::vector<std::pair<int, std::pair<ItemId, Money>>> kept;
  for (const Transaction& t : db.transactions()) {
    kept.clear();
    for (const auto& entry : t.entries) {
      if (slot.count(entry.first)) kept.emplace_back(ord.rankOf(entry.first), entry);
    }
    std::sort(kept.begin(), kept.end());
    Money remaining = 0;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      const auto& [item, util] = it->second;
      lists[slot[item]].add(t.tid, util, remaining);
      remaining += util;
    }
  }
  // Entries were appended in reverse per transaction but transactions are
  // scanned in tid order, so each list is already sorted by tid.
  return lists;
}

namespace {

const UtilityListEntry* findByTid(const UtilityList& list, Tid tid) {
  auto it = std::lower_bound(list.entries.begin(), list.entries.end(), tid,
                             [](const UtilityListEntry& e, Tid t) { return e.tid < t; });
  if (it == list.entries.end() || it->tid != tid) return nullptr;
  return &*it;
}

}  // namespace

UtilityList joinLists(const UtilityList* prefix, const UtilityList& px,
                      const UtilityList& py) {
  if (px.itemset.empty() || py.itemset.empty() ||
      px.itemset.size() != py.itemset.size() ||
      px.lastItem() == py.lastItem() ||
      !std::equal(px.itemset.begin(), px.itemset.end() - 1, py.itemset.begin())) {
    throw std::invalid_argument("joinLists: operands do not share a prefix");
  }
  if (prefix && prefix->itemset.size() + 1 != px.itemset.size()) {
    throw std::invalid_argument("joinLists: prefix list does not match operands");
  }

  UtilityList joined;
  joined.itemset = px.itemset;
  joined.itemset.push_back(py.lastItem());
  for (const UtilityListEntry& ex : px.entries) {
    const UtilityListEntry* ey = findByTid(py, ex.tid);
    if (!ey) continue;
    Money prefixIu = 0;
    if (prefix) {
      const UtilityListEntry* ep = findByTid(*prefix, ex.tid);
      if (!ep) throw std::invalid_argument("joinLists: prefix missing shared tid");
      prefixIu = ep->iutil;
    }
    joined.add(ex.tid, ex.iutil + ey->iutil - prefixIu, ey->rutil);
  }
  return joined;
}

}  // namespace tmku
