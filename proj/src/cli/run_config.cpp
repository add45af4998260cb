#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "udom/cli.hpp"
#include "udom/io.hpp"

namespace udom::cli {

namespace {

void env_int(const char* name, int& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) throw std::invalid_argument(std::string(name) + ": expected a non-negative integer");
  target = static_cast<int>(v);
}

}  // namespace

void apply_env_caps(RunConfig& cfg) {
  env_int("UDOM_CAP_ENUMERATE", cfg.caps.enumerate_n);
  env_int("UDOM_CAP_CHAIN", cfg.caps.chain_n);
  env_int("UDOM_CAP_MDSE", cfg.caps.mdse_n);
  env_int("UDOM_CAP_MMHS", cfg.caps.mmhs_n);
  env_int("UDOM_CAP_BAG", cfg.max_bag);
}

std::string ReportRecord::to_line() const {
  std::ostringstream s;
  s << instance << ' ' << algo << ' ' << value << ' ' << std::fixed << std::setprecision(3) << time_ms << ' ' << nodes
    << ' ' << ok;
  return s.str();
}

void append_report(const std::string& path, const std::vector<ReportRecord>& records) {
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream f(path, std::ios::app);
  if (!f) throw std::runtime_error("cannot open report " + path);
  if (fresh) f << kReportHeader << '\n';
  for (const auto& r : records) f << r.to_line() << '\n';
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("--in is required");
  ParseOptions opts;
  opts.format = cfg.edge_list ? GraphFormat::edge_list : GraphFormat::dimacs_like;
  opts.one_based = cfg.one_based;
  return read_graph_file(cfg.input, opts);
}

}  // namespace udom::cli
