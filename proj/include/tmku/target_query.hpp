#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "tmku/database.hpp"
#include "tmku/tp_tree.hpp"

namespace tmku {

// User-chosen target itemset, normalized to ascending processing order.
// Items the database has never seen leave allKnown false; such targets can
// never occur, so queries on them are empty by construction.
struct TargetPattern {
  Itemset items;
  bool allKnown = true;

  static TargetPattern fromItems(const Database& db, Itemset raw);

  bool empty() const { return items.empty(); }
};

// Walk state of the bottom-up matcher: the next target position to consume
// (counting down; -1 once everything matched) and the tree position.
struct QueryCursor {
  int posToMatch = -1;
  const TpNode* node = nullptr;
};

// TWU-guided bottom-up containment test. node must name an occurrence of the
// last (max-TWU) target item; target items are consumed walking parent links,
// aborting as soon as an ancestor's TWU drops below the next wanted item's.
// On abort, *stopNode (when given) receives the ancestor that failed.
bool matchBottomUp(const TpNode* node, std::span<const ItemId> target,
                   const Database& db, const TpNode** stopNode = nullptr);

struct QueryOptions {
  bool ruPrune = true;         // skip subtrees with sumIu + sumRu below threshold
  bool twuTargetMatch = true;  // bottom-up TWU matcher vs. plain path containment
};

struct QueryStats {
  std::uint64_t visitedNodes = 0;
  std::uint64_t emitted = 0;
};

// Called once per discovered target high-utility itemset, in walk order.
// Items arrive in path (ascending-TWU) order; utility is the stored sumIu.
using ThuiVisitor = std::function<void(const Itemset&, Money)>;

// Re-read before every subtree bound check, so a rising selection threshold
// can tighten pruning mid-walk. Must never return less than the minUtil the
// tree was built with.
using ThresholdFn = std::function<Money()>;

// Emits every isEnd node whose itemset contains the target and whose stored
// utility reaches minUtil. The tree must be frozen.
QueryStats queryTree(const TpTree& tree, const Database& db,
                     const TargetPattern& target, Money minUtil,
                     const ThuiVisitor& visit, QueryOptions options = {},
                     const ThresholdFn& threshold = {});

}  // namespace tmku
