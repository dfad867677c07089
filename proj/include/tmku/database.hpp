#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tmku/types.hpp"

namespace tmku {

// Raised on malformed input; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Transaction {
  Tid tid = 0;
  // (item, utility) pairs in file order; no duplicate items, utilities >= 0.
  std::vector<std::pair<ItemId, Money>> entries;
  // Transaction utility, equal to the sum of entry utilities.
  Money tu = 0;
};

// Total order on items used by the whole pipeline: ascending TWU, ties by
// ascending item id. rank is dense, 0-based.
struct ProcessingOrder {
  std::vector<ItemId> items;
  std::unordered_map<ItemId, int> rank;

  bool precedes(ItemId a, ItemId b) const { return rank.at(a) < rank.at(b); }
  int rankOf(ItemId item) const { return rank.at(item); }
  bool contains(ItemId item) const { return rank.count(item) != 0; }
};

// A quantitative transaction database with its derived tables. Immutable
// after construction; safe for concurrent read-only use.
class Database {
 public:
  Database() = default;
  explicit Database(std::vector<Transaction> transactions);

  // Parses the SPMF utility transaction format: one transaction per line,
  // `i1 i2 ... in:TU:u1 u2 ... un`. Lines starting with '#' are comments,
  // blank lines are skipped, CRLF is accepted. Tids are assigned 1..n in
  // file order. Throws ParseError on malformed lines or an empty database.
  static Database parseSpmf(std::istream& input);
  static Database parseSpmfFile(const std::string& path);

  const std::vector<Transaction>& transactions() const { return transactions_; }

  // TWU of a single item; 0 for items absent from every transaction.
  Money twu(ItemId item) const;
  const std::map<ItemId, Money>& twuTable() const { return twu_; }

  // Real utility u({i}); 0 for absent items.
  Money itemUtility(ItemId item) const;
  const std::map<ItemId, Money>& itemUtilityTable() const { return itemUtil_; }

  // Exact utility of an itemset: sum over transactions containing every
  // member of the per-transaction utilities of the members.
  Money utilityOf(const Itemset& itemset) const;

  const ProcessingOrder& order() const { return order_; }

  std::size_t distinctItemCount() const { return twu_.size(); }

  // Recomputes the TWU table from scratch; used by construction and as a
  // cross-check entry point.
  static std::map<ItemId, Money> computeTwu(const std::vector<Transaction>& transactions);

 private:
  std::vector<Transaction> transactions_;
  std::map<ItemId, Money> twu_;
  std::map<ItemId, Money> itemUtil_;
  ProcessingOrder order_;
};

// Serializes back to the SPMF utility format, one transaction per line.
void writeSpmf(const Database& db, std::ostream& out);

}  // namespace tmku
