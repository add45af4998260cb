#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udom/corpus.hpp"
#include "udom/graph.hpp"
#include "udom/oracle.hpp"

namespace udom::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::string command;
  std::string algo;
  std::optional<int> k;
  std::optional<int> ell;
  int d = 2;
  int n = 0;
  int m = 0;
  double p = 0.3;
  OracleCaps caps;
  int max_bag = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string input;
  std::string output;
  std::string witness;
  std::string decomposition;
  std::string set;
  std::string colours;
  std::string report;
  std::string strategy = "min-degree";
  std::string family;
  std::string problem = "ud";
  std::string suite;
  std::vector<std::string> algos;
  int count = 0;
  bool edge_list = false;
  bool one_based = false;
  bool fail_on_no = false;
  bool serial = false;
};

/// Reads UDOM_CAP_ENUMERATE, UDOM_CAP_CHAIN, UDOM_CAP_MDSE, UDOM_CAP_MMHS and
/// UDOM_CAP_BAG. Throws std::invalid_argument on a non-numeric value.
void apply_env_caps(RunConfig& cfg);

/// "instance algo value time_ms nodes ok"
struct ReportRecord {
  std::string instance;
  std::string algo;
  int value = 0;
  double time_ms = 0;
  std::uint64_t nodes = 0;
  std::string ok = "yes";
  std::string to_line() const;
};

inline constexpr const char* kReportHeader = "instance algo value time_ms nodes ok";

/// Appends records to `path` (header written when the file is new).
void append_report(const std::string& path, const std::vector<ReportRecord>& records);

Graph load_graph(const RunConfig& cfg);

/// Gamma by one exact algorithm: oracle, pathdp, coud-branch (smallest
/// accepted ell), ud-branch (largest accepted k).
struct GammaRun {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
  double time_ms = 0;
};
GammaRun solve_gamma(const Graph& g, const std::string& algo, const RunConfig& cfg);
bool is_exact_algo(const std::string& algo);

struct BenchOutcome {
  std::vector<ReportRecord> records;
  /// mismatches[a][b]: instances on which exact algorithms a and b disagree.
  std::vector<std::vector<int>> mismatches;
  int failed_checks = 0;
};

/// Built-in suites: small, exhaustive-n7, random-subcubic, gn-family,
/// reduction-samples. Algorithms: oracle, pathdp, coud-branch, ud-branch,
/// coud4, udcolor. Throws std::invalid_argument on unknown names.
BenchOutcome run_bench(const RunConfig& cfg, std::ostream& out);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udom::cli
