#pragma once

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tmku/database.hpp"
#include "tmku/miner.hpp"

namespace tmku::test {

// Example database used throughout: seven transactions over items 1..7
// (a=1 .. g=7), utilities already multiplied out per unit profit
// {a:1, b:3, c:2, d:4, e:2, f:1, g:2}.
constexpr ItemId A = 1, B = 2, C = 3, D = 4, E = 5, F = 6, G = 7;

inline std::string exampleSpmf() {
  return
      "2 4 5:26:12 12 2\n"
      "1 2 5:14:1 9 4\n"
      "3 4:10:6 4\n"
      "1 2 3 6 7:18:3 3 8 2 2\n"
      "1 2:7:1 6\n"
      "2 3 4 6:27:3 6 16 2\n"
      "1 5 7:10:4 2 4\n";
}

inline Database exampleDb() {
  std::istringstream in(exampleSpmf());
  return Database::parseSpmf(in);
}

// Independent utility computation: straight scan over raw transactions,
// no utility lists, no processing order.
inline Money bruteUtility(const Database& db, const Itemset& itemset) {
  Money total = 0;
  for (const Transaction& t : db.transactions()) {
    Money inT = 0;
    std::size_t hits = 0;
    for (ItemId wanted : itemset) {
      for (const auto& [item, util] : t.entries) {
        if (item == wanted) {
          inT += util;
          ++hits;
          break;
        }
      }
    }
    if (hits == itemset.size()) total += inT;
  }
  return total;
}

// Exhaustive enumeration of all high-utility itemsets, keyed by id-sorted
// itemset. Only for small databases.
inline std::map<Itemset, Money> bruteAllHuis(const Database& db, Money minUtil) {
  std::vector<ItemId> items;
  for (const auto& [item, twu] : db.twuTable()) items.push_back(item);
  std::map<Itemset, Money> huis;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << items.size()); ++mask) {
    Itemset itemset;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) itemset.push_back(items[i]);
    }
    Money utility = bruteUtility(db, itemset);
    if (utility >= minUtil) huis[itemset] = utility;
  }
  return huis;
}

inline std::map<Itemset, Money> bruteThuis(const Database& db, const Itemset& target,
                                           Money minUtil) {
  std::map<Itemset, Money> out;
  for (const auto& [itemset, utility] : bruteAllHuis(db, minUtil)) {
    bool containsAll = true;
    for (ItemId item : target) {
      if (!std::binary_search(itemset.begin(), itemset.end(), item)) {
        containsAll = false;
        break;
      }
    }
    if (containsAll) out[itemset] = utility;
  }
  return out;
}

// Random database in the oracle-checkable regime: up to maxItems distinct
// items, up to maxTransactions transactions, per-item utilities 1..9.
inline Database randomDatabase(std::mt19937_64& rng, std::size_t maxItems = 10,
                               std::size_t maxTransactions = 25) {
  std::size_t itemCount = 2 + rng() % (maxItems - 1);
  std::size_t transactionCount = 1 + rng() % maxTransactions;
  std::vector<Transaction> transactions;
  for (std::size_t i = 0; i < transactionCount; ++i) {
    std::size_t length = 1 + rng() % std::min<std::size_t>(itemCount, 6);
    std::set<ItemId> chosen;
    while (chosen.size() < length) {
      chosen.insert(static_cast<ItemId>(1 + rng() % itemCount));
    }
    Transaction t;
    t.tid = static_cast<Tid>(i + 1);
    for (ItemId item : chosen) {
      Money util = 1 + static_cast<Money>(rng() % 9);
      t.entries.emplace_back(item, util);
      t.tu += util;
    }
    transactions.push_back(std::move(t));
  }
  return Database(std::move(transactions));
}

inline Itemset randomTarget(std::mt19937_64& rng, const Database& db,
                            std::size_t maxSize = 3) {
  std::size_t size = rng() % (maxSize + 1);
  std::set<ItemId> chosen;
  const auto& items = db.order().items;
  while (chosen.size() < size && chosen.size() < items.size()) {
    chosen.insert(items[rng() % items.size()]);
  }
  return Itemset(chosen.begin(), chosen.end());
}

// Runs the miner with a collecting sink; itemsets keyed id-sorted.
struct MinedSet {
  std::map<Itemset, Money> huis;
  std::vector<Itemset> emissionOrder;  // id-sorted itemsets in discovery order
  MineStats stats;
};

inline MinedSet collectHuis(const Database& db, Money minUtil,
                            StrategyToggles toggles = {},
                            const ProcessingOrder* order = nullptr) {
  MinedSet mined;
  mined.stats = mine(
      db, minUtil,
      [&mined](std::span<const PathUtility> path) {
        Itemset itemset;
        for (const PathUtility& step : path) itemset.push_back(step.item);
        itemset = sortedById(itemset);
        mined.huis[itemset] = path.back().sumIu;
        mined.emissionOrder.push_back(itemset);
      },
      toggles, order);
  return mined;
}

inline ProcessingOrder reversedOrder(const Database& db) {
  ProcessingOrder reversed;
  reversed.items = db.order().items;
  std::reverse(reversed.items.begin(), reversed.items.end());
  for (std::size_t i = 0; i < reversed.items.size(); ++i) {
    reversed.rank[reversed.items[i]] = static_cast<int>(i);
  }
  return reversed;
}

}  // namespace tmku::test
