#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmku/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;

tmku::Itemset parseTarget(const std::string& spec) {
  tmku::Itemset items;
  std::istringstream stream(spec);
  long long id = 0;
  while (stream >> id) {
    if (id < 1) throw CLI::ValidationError("target", "item ids must be >= 1");
    items.push_back(static_cast<tmku::ItemId>(id));
  }
  if (!stream.eof()) throw CLI::ValidationError("target", "expected space-separated item ids");
  return items;
}

tmku::OutputFormat parseFormat(const std::string& name) {
  if (name == "text") return tmku::OutputFormat::Text;
  if (name == "json") return tmku::OutputFormat::Json;
  if (name == "csv") return tmku::OutputFormat::Csv;
  throw CLI::ValidationError("format", "expected text, json or csv");
}

int runMine(const std::string& input, tmku::Money minUtil, const std::string& format) {
  tmku::Database db = tmku::Database::parseSpmfFile(input);
  struct Hui {
    tmku::Itemset itemset;
    tmku::Money utility;
  };
  std::vector<Hui> huis;
  tmku::MineStats stats = tmku::mine(
      db, minUtil, [&huis](std::span<const tmku::PathUtility> path) {
        Hui hui;
        for (const tmku::PathUtility& step : path) hui.itemset.push_back(step.item);
        hui.utility = path.back().sumIu;
        huis.push_back(std::move(hui));
      });

  if (parseFormat(format) == tmku::OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["dataset"] = input;
    j["minUtil"] = minUtil;
    j["candidates"] = stats.candidates.visited;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Hui& hui : huis) {
      nlohmann::ordered_json ids = nlohmann::ordered_json::array();
      for (tmku::ItemId id : tmku::sortedById(hui.itemset)) ids.push_back(id);
      arr.push_back({{"itemset", std::move(ids)}, {"utility", hui.utility}});
    }
    j["huis"] = std::move(arr);
    std::cout << j.dump(2) << '\n';
  } else {
    for (const Hui& hui : huis) {
      std::cout << tmku::itemsetToString(tmku::sortedById(hui.itemset))
                << " #UTIL: " << hui.utility << '\n';
    }
    std::cout << "huis: " << huis.size() << "  candidates: " << stats.candidates.visited
              << '\n';
  }
  return kExitOk;
}

int runQuery(const tmku::MiningConfig& config) {
  tmku::RunReport report = tmku::runFile(config);
  switch (config.outputFormat) {
    case tmku::OutputFormat::Json:
      std::cout << tmku::reportToJson(report, config) << '\n';
      break;
    case tmku::OutputFormat::Csv:
      tmku::writeReportCsv(report, std::cout);
      break;
    case tmku::OutputFormat::Text:
      tmku::writeReportText(report, config, std::cout);
      break;
  }
  return kExitOk;
}

int runVerify(const std::string& input, const tmku::Itemset& target, std::size_t k) {
  tmku::Database db = tmku::Database::parseSpmfFile(input);
  tmku::MiningConfig config;
  config.inputPath = input;
  config.target = target;
  config.k = k;
  tmku::RunReport report = tmku::runPipeline(db, config);
  auto oracle = tmku::oracleTopK(db, target, k);
  std::string mismatch;
  if (!tmku::resultsMatchOracle(report.results, oracle, &mismatch)) {
    std::cerr << "verification FAILED: " << mismatch << '\n';
    return kExitVerification;
  }
  std::cout << "verification OK: " << report.results.size()
            << " results agree with exhaustive enumeration (u1 = " << report.u1 << ")\n";
  return kExitOk;
}

int runBench(const std::string& matrixPath, const std::string& inputOverride) {
  std::ifstream in(matrixPath);
  if (!in) throw tmku::ParseError("cannot open matrix file: " + matrixPath);
  nlohmann::json matrix = nlohmann::json::parse(in);

  std::string input = inputOverride.empty()
                          ? matrix.value("input", std::string{})
                          : inputOverride;
  if (input.empty()) throw CLI::ValidationError("bench", "matrix has no input and -i not given");
  tmku::Itemset target = parseTarget(matrix.value("target", std::string{}));
  tmku::Money minUtil = matrix.value("minUtil", tmku::Money{1});
  bool etaFeedback = matrix.value("etaFeedback", false);
  bool parallel = matrix.value("parallel", false);
  std::string format = matrix.value("format", std::string{"csv"});

  std::vector<tmku::BenchCell> cells;
  for (const auto& cell : matrix.at("cells")) {
    cells.push_back({cell.at("k").get<std::size_t>(),
                     cell.value("variant", std::string{"full"})});
  }

  tmku::Database db = tmku::Database::parseSpmfFile(input);
  std::vector<tmku::BenchRow> rows =
      tmku::bench(db, input, target, minUtil, etaFeedback, cells, parallel);
  if (format == "json") {
    std::cout << tmku::benchToJson(rows) << '\n';
  } else {
    tmku::writeBenchCsv(rows, std::cout);
  }
  return kExitOk;
}

int runScale(const std::string& input, double factor, std::uint64_t seed,
             const std::string& output) {
  tmku::Database db = tmku::Database::parseSpmfFile(input);
  tmku::Database scaled = tmku::synthScale(db, factor, seed);
  std::ofstream out(output);
  if (!out) throw tmku::ParseError("cannot open output file: " + output);
  tmku::writeSpmf(scaled, out);
  std::cout << "wrote " << scaled.transactions().size() << " transactions to " << output
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tmku - targeted top-k high-utility itemset mining"};
  app.require_subcommand(1);

  std::string input;
  std::string targetSpec;
  std::string format = "text";
  std::string matrixPath;
  std::string output;
  std::size_t k = 1;
  tmku::Money minUtil = 1;
  bool noS3 = false, noS4 = false, noS5 = false, etaFeedback = false;
  double factor = 1.0;
  std::uint64_t seed = 0;

  CLI::App* mine = app.add_subcommand("mine", "mine all high-utility itemsets");
  mine->add_option("-i,--input", input, "SPMF utility transaction file")->required();
  mine->add_option("--min-util", minUtil, "utility threshold")->required();
  mine->add_option("-o,--output-format", format, "text or json");

  CLI::App* query = app.add_subcommand("query", "top-k itemsets containing a target");
  query->add_option("-i,--input", input, "SPMF utility transaction file")->required();
  query->add_option("-t,--target", targetSpec, "space-separated item ids, e.g. \"2 4\"");
  query->add_option("-k", k, "number of results")->required();
  query->add_option("--min-util", minUtil, "mining threshold (default 1)");
  query->add_flag("--no-s3", noS3, "disable TWU item pruning");
  query->add_flag("--no-s4", noS4, "disable remaining-utility pruning");
  query->add_flag("--no-s5", noS5, "disable TWU-guided target matching");
  query->add_flag("--eta-feedback", etaFeedback, "raise query pruning with the selection threshold");
  query->add_option("-o,--output-format", format, "text, json or csv");

  CLI::App* verify = app.add_subcommand("verify", "check top-k against exhaustive enumeration");
  verify->add_option("-i,--input", input, "SPMF utility transaction file")->required();
  verify->add_option("-t,--target", targetSpec, "space-separated item ids");
  verify->add_option("-k", k, "number of results")->required();

  CLI::App* benchCmd = app.add_subcommand("bench", "run a (k, variant) configuration matrix");
  benchCmd->add_option("--matrix", matrixPath, "JSON matrix file")->required();
  benchCmd->add_option("-i,--input", input, "override the matrix input file");

  CLI::App* scale = app.add_subcommand("scale", "resample a database to a new size");
  scale->add_option("-i,--input", input, "SPMF utility transaction file")->required();
  scale->add_option("--factor", factor, "size multiplier")->required();
  scale->add_option("--seed", seed, "sampling seed");
  scale->add_option("-o,--output", output, "destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine->parsed()) return runMine(input, minUtil, format);
    if (query->parsed()) {
      tmku::MiningConfig config;
      config.inputPath = input;
      config.target = parseTarget(targetSpec);
      config.k = k;
      config.minUtil = minUtil;
      config.strategies = {!noS3, !noS4, !noS5};
      config.etaFeedback = etaFeedback;
      config.outputFormat = parseFormat(format);
      return runQuery(config);
    }
    if (verify->parsed()) return runVerify(input, parseTarget(targetSpec), k);
    if (benchCmd->parsed()) return runBench(matrixPath, input);
    if (scale->parsed()) return runScale(input, factor, seed, output);
  } catch (const tmku::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
