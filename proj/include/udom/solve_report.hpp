#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "udom/vertex_set.hpp"

namespace udom {

/// Execution policy for the kernels that ship both a serial reference and an
/// OpenMP variant. Both must return identical results.
enum class Exec { serial, parallel };

struct SolveReport {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
  /// One "key value" pair per line.
  std::string to_record() const;
};

/// Outcome of a decision routine; report.witness certifies a yes.
struct Decision {
  bool yes = false;
  SolveReport report;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace udom
