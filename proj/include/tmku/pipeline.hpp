#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tmku/database.hpp"
#include "tmku/miner.hpp"
#include "tmku/topk.hpp"

namespace tmku {

enum class OutputFormat { Text, Json, Csv };

struct MiningConfig {
  std::string inputPath;
  Itemset target;
  std::size_t k = 1;
  Money minUtil = 1;  // mining threshold; top-k correctness needs it <= the
                      // k-th best target itemset's utility, 1 is always safe
  StrategyToggles strategies;
  bool etaFeedback = false;  // let the rising selection threshold tighten
                             // the query's subtree bound checks
  OutputFormat outputFormat = OutputFormat::Text;
  std::uint64_t seed = 0;
};

struct RunReport {
  std::vector<TopKMap::Entry> results;  // utility descending
  Money u1 = 0;  // minimum utility among results, 0 when empty
  std::uint64_t candidates = 0;  // mining candidates + query node visits
  std::uint64_t miningCandidates = 0;
  std::uint64_t queryVisitedNodes = 0;
  std::uint64_t huiCount = 0;
  std::size_t treeNodes = 0;
  double elapsedMs = 0.0;
  std::size_t peakMemoryEstimate = 0;  // allocation-tracking estimate, bytes
};

// Full pipeline: mine at minUtil into the target-pattern tree, query with
// the target, select top k. Throws std::invalid_argument on a bad config.
RunReport runPipeline(const Database& db, const MiningConfig& config);

// Loads the database named by config.inputPath and runs the pipeline.
RunReport runFile(const MiningConfig& config);

// Exhaustive ground truth: every itemset containing the target with positive
// utility, best k by utility (ties by lexicographic id-sorted itemset).
// Guarded against blowup; throws std::invalid_argument beyond maxItems.
std::vector<std::pair<Itemset, Money>> oracleTopK(const Database& db,
                                                  const Itemset& target,
                                                  std::size_t k,
                                                  std::size_t maxItems = 20);

// True when the engine's top-k agrees with the oracle: equal lengths, equal
// utility multisets, and identical itemsets strictly above the boundary
// utility (boundary ties may differ, the two tie rules are different).
bool resultsMatchOracle(const std::vector<TopKMap::Entry>& engine,
                        const std::vector<std::pair<Itemset, Money>>& oracle,
                        std::string* mismatch = nullptr);

// Resamples transactions with replacement to ceil(factor * n), fresh tids,
// deterministic for a fixed seed.
Database synthScale(const Database& db, double factor, std::uint64_t seed);

struct SynthSpec {
  std::size_t transactionCount = 1000;
  std::size_t itemCount = 60;
  std::size_t maxTransactionLength = 8;
  Money maxUnitUtility = 5;
  std::uint64_t seed = 1;
};

// Deterministic synthetic database: skewed item popularity (low ids occur
// more often), integer utilities.
Database synthesizeDatabase(const SynthSpec& spec);

struct BenchCell {
  std::size_t k = 1;
  std::string variant;  // "full", "v1" (no ruPrune), "v2" (no twuPrune)
};

struct BenchRow {
  std::string dataset;
  std::size_t k = 0;
  std::string variant;
  Money u1 = 0;
  std::uint64_t candidates = 0;
  std::size_t resultCount = 0;
  double elapsedMs = 0.0;
  std::size_t peakMemoryEstimate = 0;
};

StrategyToggles togglesForVariant(const std::string& variant);

// Runs every cell against the shared database. Within each k, all variants
// must produce identical result sequences; a disagreement throws
// std::runtime_error naming the differing itemset. Cells run serially so
// timings do not interfere; parallelValidation opts into concurrent,
// timing-free runs instead.
std::vector<BenchRow> bench(const Database& db, const std::string& datasetName,
                            const Itemset& target, Money minUtil,
                            bool etaFeedback, const std::vector<BenchCell>& cells,
                            bool parallelValidation = false);

// Report serialization. JSON is schema-versioned and key-ordered; timings
// (elapsed, memory) can be excluded for byte-stable comparison.
std::string reportToJson(const RunReport& report, const MiningConfig& config,
                         bool includeTimings = true);
void writeReportText(const RunReport& report, const MiningConfig& config,
                     std::ostream& out);
void writeReportCsv(const RunReport& report, std::ostream& out);
void writeBenchCsv(const std::vector<BenchRow>& rows, std::ostream& out);
std::string benchToJson(const std::vector<BenchRow>& rows);

}  // namespace tmku
