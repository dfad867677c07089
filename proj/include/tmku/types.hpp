#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tmku {

// Utilities are exact integer money units throughout; no floating point.
using Money = std::int64_t;
using ItemId = std::int32_t;
using Tid = std::int32_t;

// Items of an itemset, context-dependent order (processing order inside the
// mining engine, file order in transactions, id order in reports).
using Itemset = std::vector<ItemId>;

// Returns a copy sorted by ascending item id, the canonical report order.
Itemset sortedById(Itemset items);

std::string itemsetToString(const Itemset& items);

}  // namespace tmku
