#pragma once

#include <cstdint>

namespace radiok {

/// Resource limits for one exhaustive search. threads = 0 picks
/// min(hardware concurrency, RADIOK_THREADS when set, top-level branches).
struct OracleBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
  unsigned threads = 0;
};

}  // namespace radiok
