#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "tmku/miner.hpp"
#include "tmku/types.hpp"

namespace tmku {

// Target-pattern trie node. Paths run in ascending-TWU order, so item TWU
// values never decrease from root to leaf. twu is the TWU of the node's own
// item; sumIu/sumRu belong to the itemset the root-to-node path represents.
struct TpNode {
  ItemId name = 0;
  TpNode* parent = nullptr;
  std::vector<std::unique_ptr<TpNode>> children;  // sorted by item id
  Money twu = 0;
  Money sumIu = 0;
  Money sumRu = 0;
  bool isEnd = false;
  TpNode* link = nullptr;  // next node with the same item name

  bool isRoot() const { return parent == nullptr; }
};

// Per-item chains threading every node of that item, in insertion order.
struct HeaderTable {
  std::map<ItemId, TpNode*> head;
  std::map<ItemId, TpNode*> tail;

  TpNode* first(ItemId item) const {
    auto it = head.find(item);
    return it == head.end() ? nullptr : it->second;
  }
};

// Binary search over the id-sorted child list; nullptr when absent.
TpNode* findChild(const TpNode& node, ItemId item);

// Items on the root-to-node path, in insertion (ascending-TWU) order.
Itemset pathItemset(const TpNode* node);

// Trie over the discovered high-utility itemsets. Mutable while building,
// frozen before queries; frozen trees are safe for concurrent readers.
class TpTree {
 public:
  // Root lives on the heap so parent links stay valid when a tree is moved.
  explicit TpTree(const ProcessingOrder& order)
      : root_(std::make_unique<TpNode>()), order_(&order) {}

  // Inserts one itemset: the full search path (prefix items with their
  // utility triples, last item with its own) in ascending processing order.
  // Shared prefixes are reused; utility fields of revisited nodes are
  // overwritten with the fresh values; the last node's isEnd is set. Throws
  // std::invalid_argument on an out-of-order path, std::logic_error after
  // freeze().
  void insertHui(std::span<const PathUtility> path);

  // Convenience sink for mine().
  HuiSink sink() {
    return [this](std::span<const PathUtility> path) { insertHui(path); };
  }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  const TpNode& root() const { return *root_; }
  const HeaderTable& header() const { return header_; }
  std::size_t nodeCount() const { return nodeCount_; }
  std::size_t endNodeCount() const { return endNodeCount_; }

  // Indented debug dump, one node per line: `name sumIu sumRu twu isEnd`.
  void dump(std::ostream& out) const;

 private:
  std::unique_ptr<TpNode> root_;
  HeaderTable header_;
  const ProcessingOrder* order_;
  std::size_t nodeCount_ = 0;
  std::size_t endNodeCount_ = 0;
  bool frozen_ = false;
};

}  // namespace tmku
