#include "tmku/target_query.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmku {

TargetPattern TargetPattern::fromItems(const Database& db, Itemset raw) {
  TargetPattern target;
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (ItemId item : raw) {
    if (!db.order().contains(item)) target.allKnown = false;
  }
  target.items = std::move(raw);
  if (target.allKnown) {
    std::sort(target.items.begin(), target.items.end(),
              [&db](ItemId a, ItemId b) { return db.order().precedes(a, b); });
  }
  return target;
}

bool matchBottomUp(const TpNode* node, std::span<const ItemId> target,
                   const Database& db, const TpNode** stopNode) {
  if (stopNode) *stopNode = nullptr;
  QueryCursor cursor{static_cast<int>(target.size()) - 1, node};
  while (cursor.posToMatch >= 0 && cursor.node && !cursor.node->isRoot()) {
    ItemId wanted = target[cursor.posToMatch];
    if (cursor.node->twu < db.twu(wanted)) {
      // No ancestor can hold the wanted item: TWU only shrinks upward.
      if (stopNode) *stopNode = cursor.node;
      return false;
    }
    if (cursor.node->name == wanted) --cursor.posToMatch;
    cursor.node = cursor.node->parent;
  }
  return cursor.posToMatch < 0;
}

namespace {

bool pathContains(const TpNode* node, std::span<const ItemId> target) {
  Itemset path = pathItemset(node);
  for (ItemId item : target) {
    if (std::find(path.begin(), path.end(), item) == path.end()) return false;
  }
  return true;
}

class Walker {
 public:
  Walker(const Database& db, Money minUtil, const ThuiVisitor& visit,
         QueryOptions options, const ThresholdFn& threshold)
      : db_(db), minUtil_(minUtil), visit_(visit), options_(options),
        threshold_(threshold) {}

  QueryStats stats;

  Money bound() const { return threshold_ ? threshold_() : minUtil_; }

  // Caller has already charged and bound-checked node.
  void emitSubtree(const TpNode* node) {
    if (node->isEnd && node->sumIu >= minUtil_) {
      ++stats.emitted;
      visit_(pathItemset(node), node->sumIu);
    }
    for (const auto& child : node->children) {
      ++stats.visitedNodes;
      if (options_.ruPrune && child->sumIu + child->sumRu < bound()) continue;
      emitSubtree(child.get());
    }
  }

  bool admit(const TpNode* node) {
    ++stats.visitedNodes;
    return !options_.ruPrune || node->sumIu + node->sumRu >= bound();
  }

 private:
  const Database& db_;
  Money minUtil_;
  const ThuiVisitor& visit_;
  QueryOptions options_;
  const ThresholdFn& threshold_;
};

}  // namespace

QueryStats queryTree(const TpTree& tree, const Database& db,
                     const TargetPattern& target, Money minUtil,
                     const ThuiVisitor& visit, QueryOptions options,
                     const ThresholdFn& threshold) {
  if (!tree.frozen()) throw std::logic_error("queryTree: tree not frozen");
  Walker walker(db, minUtil, visit, options, threshold);
  if (!target.allKnown) return walker.stats;

  if (target.empty()) {
    for (const auto& child : tree.root().children) {
      if (walker.admit(child.get())) walker.emitSubtree(child.get());
    }
    return walker.stats;
  }

  ItemId lastItem = target.items.back();
  for (const TpNode* node = tree.header().first(lastItem); node; node = node->link) {
    if (!walker.admit(node)) continue;
    bool matched = options.twuTargetMatch
                       ? matchBottomUp(node, target.items, db)
                       : pathContains(node, target.items);
    if (matched) walker.emitSubtree(node);
  }
  return walker.stats;
}

}  // namespace tmku
