#include "tmku/tp_tree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tmku {

TpNode* findChild(const TpNode& node, ItemId item) {
  auto it = std::lower_bound(
      node.children.begin(), node.children.end(), item,
      [](const std::unique_ptr<TpNode>& child, ItemId id) { return child->name < id; });
  if (it == node.children.end() || (*it)->name != item) return nullptr;
  return it->get();
}

Itemset pathItemset(const TpNode* node) {
  Itemset items;
  for (const TpNode* cur = node; cur != nullptr && !cur->isRoot(); cur = cur->parent) {
    items.push_back(cur->name);
  }
  std::reverse(items.begin(), items.end());
  return items;
}

void TpTree::insertHui(std::span<const PathUtility> path) {
  if (frozen_) throw std::logic_error("TpTree: insert after freeze");
  if (path.empty()) throw std::invalid_argument("TpTree: empty itemset");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!order_->contains(path[i].item) || !order_->contains(path[i + 1].item) ||
        !order_->precedes(path[i].item, path[i + 1].item)) {
      throw std::invalid_argument("TpTree: path not in processing order");
    }
  }

  TpNode* current = root_.get();
  for (const PathUtility& step : path) {
    TpNode* child = findChild(*current, step.item);
    if (!child) {
      auto fresh = std::make_unique<TpNode>();
      fresh->name = step.item;
      fresh->parent = current;
      child = fresh.get();
      auto pos = std::lower_bound(
          current->children.begin(), current->children.end(), step.item,
          [](const std::unique_ptr<TpNode>& n, ItemId id) { return n->name < id; });
      current->children.insert(pos, std::move(fresh));
      ++nodeCount_;
      // Append to the item's header chain.
      auto tailIt = header_.tail.find(step.item);
      if (tailIt == header_.tail.end()) {
        header_.head[step.item] = child;
      } else {
        tailIt->second->link = child;
      }
      header_.tail[step.item] = child;
    }
    child->sumIu = step.sumIu;
    child->sumRu = step.sumRu;
    child->twu = step.twu;
    current = child;
  }
  if (!current->isEnd) {
    current->isEnd = true;
    ++endNodeCount_;
  }
}

namespace {

void dumpNode(const TpNode& node, int depth, std::ostream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << node.name << ' ' << node.sumIu << ' ' << node.sumRu << ' ' << node.twu
      << ' ' << (node.isEnd ? 1 : 0) << '\n';
  for (const auto& child : node.children) dumpNode(*child, depth + 1, out);
}

}  // namespace

void TpTree::dump(std::ostream& out) const {
  for (const auto& child : root_->children) dumpNode(*child, 0, out);
}

}  // namespace tmku
