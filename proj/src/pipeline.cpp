#include "tmku/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tmku/target_query.hpp"
#include "tmku/tp_tree.hpp"

namespace tmku {

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate(const MiningConfig& config) {
  if (config.k < 1) throw std::invalid_argument("k must be >= 1");
  if (config.minUtil < 1) throw std::invalid_argument("minUtil must be >= 1");
}

}  // namespace

RunReport runPipeline(const Database& db, const MiningConfig& config) {
  validate(config);
  RunReport report;
  auto start = Clock::now();

  TpTree tree(db.order());
  MineStats mineStats = mine(db, config.minUtil, tree.sink(), config.strategies);
  tree.freeze();

  TargetPattern target = TargetPattern::fromItems(db, config.target);
  TopKMap map(config.k, riuSeed(db, target, config.k));
  std::uint64_t discovery = 0;
  ThresholdFn threshold;
  if (config.etaFeedback) {
    threshold = [&config, &map] { return std::max(config.minUtil, map.eta()); };
  }
  QueryOptions queryOptions{config.strategies.ruPrune, config.strategies.twuTargetMatch};
  QueryStats queryStats = queryTree(
      tree, db, target, config.minUtil,
      [&map, &discovery](const Itemset& items, Money utility) {
        map.offer(items, utility, discovery++);
      },
      queryOptions, threshold);

  report.results = map.results();
  report.u1 = report.results.empty() ? 0 : report.results.back().utility;
  report.miningCandidates = mineStats.candidates.visited;
  report.queryVisitedNodes = queryStats.visitedNodes;
  report.candidates = report.miningCandidates + report.queryVisitedNodes;
  report.huiCount = mineStats.emitted;
  report.treeNodes = tree.nodeCount();
  report.peakMemoryEstimate = tree.nodeCount() * sizeof(TpNode) +
                              mineStats.peakListEntries * sizeof(UtilityListEntry) +
                              config.k * sizeof(TopKMap::Entry);
  report.elapsedMs = millisSince(start);
  return report;
}

RunReport runFile(const MiningConfig& config) {
  Database db = Database::parseSpmfFile(config.inputPath);
  return runPipeline(db, config);
}

std::vector<std::pair<Itemset, Money>> oracleTopK(const Database& db,
                                                  const Itemset& target,
                                                  std::size_t k,
                                                  std::size_t maxItems) {
  if (db.distinctItemCount() > maxItems) {
    throw std::invalid_argument("oracleTopK: database exceeds the exhaustive-enumeration guard");
  }
  std::vector<ItemId> items;
  for (const auto& [item, twu] : db.twuTable()) items.push_back(item);
  std::map<ItemId, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<int>(i);

  std::uint64_t targetMask = 0;
  for (ItemId item : target) {
    auto it = index.find(item);
    if (it == index.end()) return {};  // target can never occur
    targetMask |= std::uint64_t{1} << it->second;
  }

  struct FlatTransaction {
    std::uint64_t mask = 0;
    std::vector<std::pair<int, Money>> entries;
  };
  std::vector<FlatTransaction> flat;
  flat.reserve(db.transactions().size());
  for (const Transaction& t : db.transactions()) {
    FlatTransaction f;
    for (const auto& [item, util] : t.entries) {
      int idx = index.at(item);
      f.mask |= std::uint64_t{1} << idx;
      f.entries.emplace_back(idx, util);
    }
    flat.push_back(std::move(f));
  }

  std::vector<int> freeIdx;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!(targetMask >> i & 1)) freeIdx.push_back(static_cast<int>(i));
  }

  std::vector<std::pair<Itemset, Money>> found;
  std::uint64_t combos = std::uint64_t{1} << freeIdx.size();
  for (std::uint64_t combo = 0; combo < combos; ++combo) {
    std::uint64_t mask = targetMask;
    for (std::size_t b = 0; b < freeIdx.size(); ++b) {
      if (combo >> b & 1) mask |= std::uint64_t{1} << freeIdx[b];
    }
    if (mask == 0) continue;
    Money utility = 0;
    for (const FlatTransaction& f : flat) {
      if ((f.mask & mask) != mask) continue;
      for (const auto& [idx, util] : f.entries) {
        if (mask >> idx & 1) utility += util;
      }
    }
    if (utility <= 0) continue;
    Itemset itemset;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) itemset.push_back(items[i]);
    }
    found.emplace_back(std::move(itemset), utility);
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;  // fixed deterministic tie rule
  });
  if (found.size() > k) found.resize(k);
  return found;
}

bool resultsMatchOracle(const std::vector<TopKMap::Entry>& engine,
                        const std::vector<std::pair<Itemset, Money>>& oracle,
                        std::string* mismatch) {
  auto fail = [&](const std::string& why) {
    if (mismatch) *mismatch = why;
    return false;
  };
  if (engine.size() != oracle.size()) {
    return fail("result count " + std::to_string(engine.size()) + " vs oracle " +
                std::to_string(oracle.size()));
  }
  if (engine.empty()) return true;

  std::vector<Money> engineUtils, oracleUtils;
  for (const auto& e : engine) engineUtils.push_back(e.utility);
  for (const auto& o : oracle) oracleUtils.push_back(o.second);
  std::sort(engineUtils.begin(), engineUtils.end());
  std::sort(oracleUtils.begin(), oracleUtils.end());
  if (engineUtils != oracleUtils) {
    return fail("utility multisets differ (engine min " +
                std::to_string(engineUtils.front()) + ", oracle min " +
                std::to_string(oracleUtils.front()) + ")");
  }

  // Itemsets strictly above the boundary utility are uniquely determined.
  Money boundary = engineUtils.front();
  std::set<Itemset> engineTop, oracleTop;
  for (const auto& e : engine) {
    if (e.utility > boundary) engineTop.insert(sortedById(e.itemset));
  }
  for (const auto& o : oracle) {
    if (o.second > boundary) oracleTop.insert(sortedById(o.first));
  }
  if (engineTop != oracleTop) {
    return fail("itemsets above the boundary utility differ");
  }
  return true;
}

Database synthScale(const Database& db, double factor, std::uint64_t seed) {
  if (!(factor > 0.0)) throw std::invalid_argument("synthScale: factor must be > 0");
  const auto& source = db.transactions();
  auto count = static_cast<std::size_t>(std::ceil(factor * static_cast<double>(source.size())));
  std::mt19937_64 rng(seed);
  std::vector<Transaction> sampled;
  sampled.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Transaction t = source[rng() % source.size()];
    t.tid = static_cast<Tid>(i + 1);
    sampled.push_back(std::move(t));
  }
  return Database(std::move(sampled));
}

Database synthesizeDatabase(const SynthSpec& spec) {
  if (spec.transactionCount == 0 || spec.itemCount == 0 ||
      spec.maxTransactionLength == 0 || spec.maxUnitUtility < 1) {
    throw std::invalid_argument("synthesizeDatabase: bad spec");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Money> unitUtility(spec.itemCount);
  for (Money& u : unitUtility) u = 1 + static_cast<Money>(rng() % spec.maxUnitUtility);

  std::size_t maxLen = std::min(spec.maxTransactionLength, spec.itemCount);
  std::vector<Transaction> transactions;
  transactions.reserve(spec.transactionCount);
  for (std::size_t i = 0; i < spec.transactionCount; ++i) {
    std::size_t length = 1 + rng() % maxLen;
    std::set<std::size_t> picked;
    while (picked.size() < length) {
      // min of two uniform draws skews popularity toward low indices
      std::size_t a = rng() % spec.itemCount;
      std::size_t b = rng() % spec.itemCount;
      picked.insert(std::min(a, b));
    }
    Transaction t;
    t.tid = static_cast<Tid>(i + 1);
    for (std::size_t idx : picked) {
      Money qty = 1 + static_cast<Money>(rng() % 4);
      Money util = qty * unitUtility[idx];
      t.entries.emplace_back(static_cast<ItemId>(idx + 1), util);
      t.tu += util;
    }
    transactions.push_back(std::move(t));
  }
  return Database(std::move(transactions));
}

StrategyToggles togglesForVariant(const std::string& variant) {
  if (variant.empty() || variant == "full") return StrategyToggles::full();
  if (variant == "v1") return StrategyToggles::v1();
  if (variant == "v2") return StrategyToggles::v2();
  throw std::invalid_argument("unknown variant '" + variant + "' (expected full, v1 or v2)");
}

std::vector<BenchRow> bench(const Database& db, const std::string& datasetName,
                            const Itemset& target, Money minUtil,
                            bool etaFeedback, const std::vector<BenchCell>& cells,
                            bool parallelValidation) {
  if (cells.empty()) throw std::invalid_argument("bench: empty configuration matrix");

  struct CellOutcome {
    BenchRow row;
    std::vector<TopKMap::Entry> results;
  };
  auto runCell = [&](const BenchCell& cell) {
    MiningConfig config;
    config.target = target;
    config.k = cell.k;
    config.minUtil = minUtil;
    config.strategies = togglesForVariant(cell.variant);
    config.etaFeedback = etaFeedback;
    RunReport report = runPipeline(db, config);
    CellOutcome outcome;
    outcome.row = {datasetName,          cell.k,
                   cell.variant,         report.u1,
                   report.candidates,    report.results.size(),
                   report.elapsedMs,     report.peakMemoryEstimate};
    outcome.results = std::move(report.results);
    return outcome;
  };

  std::vector<CellOutcome> outcomes;
  outcomes.reserve(cells.size());
  if (parallelValidation) {
    std::vector<std::future<CellOutcome>> futures;
    futures.reserve(cells.size());
    for (const BenchCell& cell : cells) {
      futures.push_back(std::async(std::launch::async, runCell, cell));
    }
    for (auto& f : futures) {
      CellOutcome outcome = f.get();
      outcome.row.elapsedMs = 0.0;  // concurrent timings are not meaningful
      outcomes.push_back(std::move(outcome));
    }
  } else {
    for (const BenchCell& cell : cells) outcomes.push_back(runCell(cell));
  }

  // All variants sharing a k must agree exactly.
  std::map<std::size_t, std::size_t> reference;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto [it, fresh] = reference.try_emplace(outcomes[i].row.k, i);
    if (fresh) continue;
    const CellOutcome& a = outcomes[it->second];
    const CellOutcome& b = outcomes[i];
    std::size_t n = std::max(a.results.size(), b.results.size());
    for (std::size_t j = 0; j < n; ++j) {
      bool differ = j >= a.results.size() || j >= b.results.size() ||
                    sortedById(a.results[j].itemset) != sortedById(b.results[j].itemset) ||
                    a.results[j].utility != b.results[j].utility;
      if (differ) {
        const Itemset& witness = j < a.results.size() ? a.results[j].itemset
                                                      : b.results[j].itemset;
        throw std::runtime_error(
            "bench: variant disagreement at k=" + std::to_string(a.row.k) + " between " +
            a.row.variant + " and " + b.row.variant + " on itemset {" +
            itemsetToString(sortedById(witness)) + "}");
      }
    }
  }

  std::vector<BenchRow> rows;
  rows.reserve(outcomes.size());
  for (auto& outcome : outcomes) rows.push_back(std::move(outcome.row));
  return rows;
}

namespace {

nlohmann::ordered_json itemsetJson(const Itemset& itemset) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (ItemId item : sortedById(itemset)) arr.push_back(item);
  return arr;
}

nlohmann::ordered_json reportJson(const RunReport& report, const MiningConfig& config,
                                  bool includeTimings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["dataset"] = config.inputPath;
  j["target"] = itemsetJson(config.target);
  j["k"] = config.k;
  j["minUtil"] = config.minUtil;
  j["strategies"] = {{"s3", config.strategies.twuPrune},
                     {"s4", config.strategies.ruPrune},
                     {"s5", config.strategies.twuTargetMatch}};
  j["etaFeedback"] = config.etaFeedback;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& entry : report.results) {
    results.push_back({{"itemset", itemsetJson(entry.itemset)}, {"utility", entry.utility}});
  }
  j["results"] = std::move(results);
  j["u1"] = report.u1;
  j["candidates"] = report.candidates;
  j["miningCandidates"] = report.miningCandidates;
  j["queryVisitedNodes"] = report.queryVisitedNodes;
  j["huiCount"] = report.huiCount;
  j["treeNodes"] = report.treeNodes;
  if (includeTimings) {
    j["elapsedMs"] = report.elapsedMs;
    j["peakMemoryEstimateBytes"] = report.peakMemoryEstimate;
  }
  return j;
}

}  // namespace

std::string reportToJson(const RunReport& report, const MiningConfig& config,
                         bool includeTimings) {
  return reportJson(report, config, includeTimings).dump(2);
}

void writeReportText(const RunReport& report, const MiningConfig& config,
                     std::ostream& out) {
  out << "target: {" << itemsetToString(sortedById(config.target)) << "}  k: " << config.k
      << "  minUtil: " << config.minUtil << '\n';
  for (const auto& entry : report.results) {
    out << itemsetToString(sortedById(entry.itemset)) << " #UTIL: " << entry.utility << '\n';
  }
  out << "results: " << report.results.size() << "  u1: " << report.u1
      << "  candidates: " << report.candidates << "  huis: " << report.huiCount
      << "  elapsedMs: " << report.elapsedMs << '\n';
}

void writeReportCsv(const RunReport& report, std::ostream& out) {
  out << "itemset,utility\n";
  for (const auto& entry : report.results) {
    out << itemsetToString(sortedById(entry.itemset)) << ',' << entry.utility << '\n';
  }
}

void writeBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "dataset,k,variant,u1,candidates,results,elapsed_ms,memory_estimate_bytes\n";
  for (const BenchRow& row : rows) {
    out << row.dataset << ',' << row.k << ',' << row.variant << ',' << row.u1 << ','
        << row.candidates << ',' << row.resultCount << ',' << row.elapsedMs << ','
        << row.peakMemoryEstimate << '\n';
  }
}

std::string benchToJson(const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchRow& row : rows) {
    arr.push_back({{"dataset", row.dataset},
                   {"k", row.k},
                   {"variant", row.variant},
                   {"u1", row.u1},
                   {"candidates", row.candidates},
                   {"results", row.resultCount},
                   {"elapsedMs", row.elapsedMs},
                   {"memoryEstimateBytes", row.peakMemoryEstimate}});
  }
  j["rows"] = std::move(arr);
  return j.dump(2);
}

}  // namespace tmku
