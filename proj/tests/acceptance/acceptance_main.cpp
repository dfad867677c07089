// Acceptance suite: runs every contract check end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "support/fixtures.hpp"
#include "tmku/pipeline.hpp"
#include "tmku/target_query.hpp"
#include "tmku/tp_tree.hpp"

using namespace tmku;
using namespace tmku::test;

namespace {

using Clock = std::chrono::steady_clock;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
}

// --- criterion 1: full high-utility itemset set of the example database ---

void criterion1() {
  auto start = Clock::now();
  Database db = exampleDb();
  MinedSet mined = collectHuis(db, 25);
  double ms = millisSince(start);
  std::map<Itemset, Money> expected = {
      {{B, C, D, F}, 27}, {{B, C, D}, 25}, {{B, D, E}, 26}, {{D}, 32},
      {{B, E}, 27},       {{B, D}, 43},    {{C, D}, 32},    {{B}, 33},
  };
  bool ok = mined.huis == expected && ms < 1000.0;
  std::ostringstream detail;
  detail << mined.huis.size() << " itemsets, " << ms << " ms";
  report(1, "threshold-25 mining reproduces the eight known itemsets", ok, detail.str());
}

// --- criterion 2: targeted query and top-3 selection ---

void criterion2() {
  Database db = exampleDb();
  TpTree tree(db.order());
  mine(db, 25, tree.sink());
  tree.freeze();

  TargetPattern target = TargetPattern::fromItems(db, {B, D});
  std::map<Itemset, Money> found;
  queryTree(tree, db, target, 25, [&found](const Itemset& items, Money utility) {
    found[sortedById(items)] = utility;
  });
  std::map<Itemset, Money> expected = {
      {{B, C, D, F}, 27}, {{B, D, E}, 26}, {{B, C, D}, 25}, {{B, D}, 43}};
  bool ok = found == expected;

  MiningConfig config;
  config.target = {B, D};
  config.k = 3;
  config.minUtil = 25;
  RunReport run = runPipeline(db, config);
  std::vector<Money> utilities;
  for (const auto& entry : run.results) utilities.push_back(entry.utility);
  ok = ok && utilities == std::vector<Money>{43, 27, 26};

  report(2, "target {b,d} yields its four itemsets and top-3 utilities", ok,
         "THUIs=" + std::to_string(found.size()));
}

// --- criterion 3: bottom-up matcher aborts at the predicted node ---

void criterion3() {
  Database db = exampleDb();
  TpTree tree(db.order());
  mine(db, 25, tree.sink());
  tree.freeze();

  const TpNode* tail = nullptr;
  for (const TpNode* node = tree.header().first(B); node; node = node->link) {
    if (pathItemset(node) == Itemset{F, C, D, B}) tail = node;
  }
  bool ok = tail != nullptr;
  const TpNode* stop = nullptr;
  if (ok) {
    TargetPattern target = TargetPattern::fromItems(db, {A, B});
    bool matched = matchBottomUp(tail, target.items, db, &stop);
    ok = !matched && stop != nullptr && stop->name == F;
  }
  report(3, "matching {a,b} against the f-c-d-b path stops at node f", ok,
         stop ? "stopped at item " + std::to_string(stop->name) : "path missing");
}

// --- criteria 4 and 5: oracle equivalence and ablation identity ---

struct RandomCase {
  Database db;
  Itemset target;
  std::size_t k;
};

RandomCase makeCase(std::mt19937_64& rng) {
  RandomCase c{randomDatabase(rng), {}, 1 + rng() % 8};
  c.target = randomTarget(rng, c.db);
  return c;
}

void criteria4and5() {
  constexpr int kRounds = 200;
  auto start = Clock::now();
  int oracleAgreements = 0;
  int ablationAgreements = 0;
  std::string firstMismatch;

  std::mt19937_64 rng(20220925);
  for (int round = 0; round < kRounds; ++round) {
    RandomCase c = makeCase(rng);
    MiningConfig config;
    config.target = c.target;
    config.k = c.k;

    config.strategies = StrategyToggles::full();
    RunReport full = runPipeline(c.db, config);
    config.strategies = StrategyToggles::v1();
    RunReport v1 = runPipeline(c.db, config);
    config.strategies = StrategyToggles::v2();
    RunReport v2 = runPipeline(c.db, config);

    std::string mismatch;
    if (resultsMatchOracle(full.results, oracleTopK(c.db, c.target, c.k), &mismatch)) {
      ++oracleAgreements;
    } else if (firstMismatch.empty()) {
      firstMismatch = "round " + std::to_string(round) + ": " + mismatch;
    }

    auto sameResults = [](const RunReport& a, const RunReport& b) {
      if (a.results.size() != b.results.size()) return false;
      for (std::size_t i = 0; i < a.results.size(); ++i) {
        if (a.results[i].utility != b.results[i].utility ||
            sortedById(a.results[i].itemset) != sortedById(b.results[i].itemset)) {
          return false;
        }
      }
      return true;
    };
    if (sameResults(full, v1) && sameResults(full, v2) &&
        full.candidates <= v1.candidates && full.candidates <= v2.candidates) {
      ++ablationAgreements;
    }
  }
  double ms = millisSince(start);

  report(4, "engine equals the exhaustive oracle on 200 random databases",
         oracleAgreements == kRounds && ms < 60000.0,
         std::to_string(oracleAgreements) + "/200 in " + std::to_string(ms) + " ms" +
             (firstMismatch.empty() ? "" : "; first mismatch: " + firstMismatch));
  report(5, "strategy ablations agree and never beat the full variant's candidate count",
         ablationAgreements == kRounds, std::to_string(ablationAgreements) + "/200");
}

// --- criterion 6: u1 and candidate trends over k on a synthetic database ---

void criterion6() {
  SynthSpec spec;
  spec.transactionCount = 1250;
  spec.itemCount = 30;
  spec.maxTransactionLength = 6;
  spec.seed = 1009;
  Database base = synthesizeDatabase(spec);
  Database big = synthScale(base, 4.0, 2027);  // 5000 transactions

  std::vector<std::size_t> ks = {10, 50, 100, 500, 1000};
  std::vector<Money> u1s;
  std::vector<std::uint64_t> candidates;
  for (std::size_t k : ks) {
    MiningConfig config;
    config.target = {1};
    config.k = k;
    config.etaFeedback = true;
    RunReport run = runPipeline(big, config);
    u1s.push_back(run.u1);
    candidates.push_back(run.candidates);
  }
  bool u1Monotone = true, candMonotone = true;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (u1s[i] > u1s[i - 1]) u1Monotone = false;
    if (candidates[i] < candidates[i - 1]) candMonotone = false;
  }
  std::ostringstream detail;
  detail << big.transactions().size() << " transactions; u1:";
  for (Money u : u1s) detail << ' ' << u;
  detail << "; candidates:";
  for (std::uint64_t c : candidates) detail << ' ' << c;
  report(6, "u1 falls and candidates grow across the k sweep", u1Monotone && candMonotone,
         detail.str());
}

// --- criterion 7: elapsed time grows with database scale ---

void criterion7() {
  SynthSpec spec;
  spec.transactionCount = 1250;
  spec.itemCount = 30;
  spec.maxTransactionLength = 6;
  spec.seed = 1013;
  Database base = synthesizeDatabase(spec);

  std::vector<double> elapsed;
  for (double factor : {1.0, 2.0, 4.0, 8.0}) {
    Database scaled = synthScale(base, factor, 7);
    MiningConfig config;
    config.target = {1};
    config.k = 50;
    double best = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      RunReport run = runPipeline(scaled, config);
      best = rep == 0 ? run.elapsedMs : std::min(best, run.elapsedMs);
    }
    elapsed.push_back(best);
  }
  int inversions = 0;
  bool withinTolerance = true;
  for (std::size_t i = 1; i < elapsed.size(); ++i) {
    if (elapsed[i] < elapsed[i - 1]) {
      ++inversions;
      if (elapsed[i] < 0.9 * elapsed[i - 1]) withinTolerance = false;
    }
  }
  std::ostringstream detail;
  detail << "ms per factor:";
  for (double ms : elapsed) detail << ' ' << ms;
  report(7, "elapsed time is nondecreasing across scale factors 1,2,4,8",
         inversions <= 1 && withinTolerance, detail.str());
}

// --- criterion 8: byte-identical reports apart from timings ---

void criterion8() {
  SynthSpec spec;
  spec.transactionCount = 400;
  spec.itemCount = 20;
  spec.seed = 77;
  Database db = synthesizeDatabase(spec);
  MiningConfig config;
  config.inputPath = "synthetic-seed-77";
  config.target = {1, 2};
  config.k = 25;
  config.seed = 77;
  config.etaFeedback = true;

  std::string first = reportToJson(runPipeline(db, config), config, false);
  std::string second = reportToJson(runPipeline(db, config), config, false);
  report(8, "identical configs produce byte-identical reports", first == second,
         std::to_string(first.size()) + " bytes");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criteria4and5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
