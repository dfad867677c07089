#include "tmku/database.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace tmku {

Itemset sortedById(Itemset items) {
  std::sort(items.begin(), items.end());
  return items;
}

std::string itemsetToString(const Itemset& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(items[i]);
  }
  return out;
}

namespace {

std::vector<std::string> splitOn(const std::string& text, char delim) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(delim, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string tok;
  while (stream >> tok) out.push_back(tok);
  return out;
}

long long parseInteger(const std::string& tok, int lineNo, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + tok + "' at line " +
                     std::to_string(lineNo));
  }
  return value;
}

}  // namespace

Database::Database(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {
  twu_ = computeTwu(transactions_);
  for (const Transaction& t : transactions_) {
    for (const auto& [item, util] : t.entries) itemUtil_[item] += util;
  }
  // Ascending TWU, ties by ascending item id.
  std::vector<std::pair<Money, ItemId>> keyed;
  keyed.reserve(twu_.size());
  for (const auto& [item, twu] : twu_) keyed.emplace_back(twu, item);
  std::sort(keyed.begin(), keyed.end());
  order_.items.reserve(keyed.size());
  for (const auto& [twu, item] : keyed) {
    order_.rank[item] = static_cast<int>(order_.items.size());
    order_.items.push_back(item);
  }
}

std::map<ItemId, Money> Database::computeTwu(const std::vector<Transaction>& transactions) {
  std::map<ItemId, Money> twu;
  for (const Transaction& t : transactions) {
    for (const auto& [item, util] : t.entries) twu[item] += t.tu;
  }
  return twu;
}

Money Database::twu(ItemId item) const {
  auto it = twu_.find(item);
  return it == twu_.end() ? 0 : it->second;
}

Money Database::itemUtility(ItemId item) const {
  auto it = itemUtil_.find(item);
  return it == itemUtil_.end() ? 0 : it->second;
}

Money Database::utilityOf(const Itemset& itemset) const {
  Money total = 0;
  for (const Transaction& t : transactions_) {
    Money inTransaction = 0;
    std::size_t found = 0;
    for (const auto& [item, util] : t.entries) {
      if (std::find(itemset.begin(), itemset.end(), item) != itemset.end()) {
        inTransaction += util;
        ++found;
      }
    }
    if (found == itemset.size()) total += inTransaction;
  }
  return total;
}

Database Database::parseSpmf(std::istream& input) {
  std::vector<Transaction> transactions;
  std::string line;
  int lineNo = 0;
  while (std::getline(input, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields = splitOn(line, ':');
    if (fields.size() != 3) {
      throw ParseError("malformed line " + std::to_string(lineNo) +
                       ": expected 'items:TU:utilities'");
    }
    std::vector<std::string> itemToks = tokens(fields[0]);
    std::vector<std::string> utilToks = tokens(fields[2]);
    if (itemToks.size() != utilToks.size()) {
      throw ParseError("item/utility count mismatch at line " + std::to_string(lineNo));
    }

    Transaction t;
    t.tid = static_cast<Tid>(transactions.size() + 1);
    std::unordered_set<ItemId> seen;
    Money sum = 0;
    for (std::size_t i = 0; i < itemToks.size(); ++i) {
      long long id = parseInteger(itemToks[i], lineNo, "item id");
      long long util = parseInteger(utilToks[i], lineNo, "utility");
      if (id < 1 || id > std::numeric_limits<ItemId>::max()) {
        throw ParseError("item id out of range at line " + std::to_string(lineNo));
      }
      if (util < 0) {
        throw ParseError("negative value at line " + std::to_string(lineNo));
      }
      if (!seen.insert(static_cast<ItemId>(id)).second) {
        throw ParseError("duplicate item " + std::to_string(id) + " at line " +
                         std::to_string(lineNo));
      }
      t.entries.emplace_back(static_cast<ItemId>(id), static_cast<Money>(util));
      sum += util;
    }
    Money declaredTu = parseInteger(fields[1], lineNo, "transaction utility");
    if (declaredTu < 0) {
      throw ParseError("negative value at line " + std::to_string(lineNo));
    }
    if (declaredTu != sum) {
      throw ParseError("TU mismatch at line " + std::to_string(lineNo));
    }
    t.tu = sum;
    transactions.push_back(std::move(t));
  }
  if (transactions.empty()) {
    throw ParseError("empty database: no transactions found");
  }
  return Database(std::move(transactions));
}

Database Database::parseSpmfFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return parseSpmf(in);
}

void writeSpmf(const Database& db, std::ostream& out) {
  for (const Transaction& t : db.transactions()) {
    std::string items;
    std::string utils;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      if (i > 0) {
        items += ' ';
        utils += ' ';
      }
      items += std::to_string(t.entries[i].first);
      utils += std::to_string(t.entries[i].second);
    }
    out << items << ':' << t.tu << ':' << utils << '\n';
  }
}

}  // namespace tmku
