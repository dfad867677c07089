#pragma once

#include <vector>

#include "tmku/database.hpp"
#include "tmku/types.hpp"

namespace tmku {

struct UtilityListEntry {
  Tid tid = 0;
  Money iutil = 0;  // utility of the itemset in this transaction
  Money rutil = 0;  // utility of the items after the itemset, in processing order
};

// Per-itemset utility list: one entry per supporting transaction, ordered by
// tid, with running sums. sumIu is the exact utility of the itemset;
// sumIu + sumRu upper-bounds the utility of any extension with later items.
struct UtilityList {
  Itemset itemset;  // ascending processing order
  std::vector<UtilityListEntry> entries;
  Money sumIu = 0;
  Money sumRu = 0;

  ItemId lastItem() const { return itemset.back(); }

  void add(Tid tid, Money iutil, Money rutil) {
    entries.push_back({tid, iutil, rutil});
    sumIu += iutil;
    sumRu += rutil;
  }
};

// Builds the depth-1 utility lists, ordered by ascending TWU. When twuPrune
// is set, items with twu < minUtil are dropped entirely (they cannot appear
// in any high-utility itemset); remaining utilities are computed over the
// kept items only. An explicit order overrides the database's.
std::vector<UtilityList> buildInitialLists(const Database& db, Money minUtil,
                                           bool twuPrune = true,
                                           const ProcessingOrder* order = nullptr);

// HUI-Miner style join. px and py must share all but their last item, and
// py's last item must follow px's in processing order; prefix is the shared
// prefix's list (nullptr at depth 1). Entries exist only for tids present in
// both px and py. Throws std::invalid_argument on a precondition violation.
UtilityList joinLists(const UtilityList* prefix, const UtilityList& px,
                      const UtilityList& py);

}  // namespace tmku
