#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cyclosemi {

inline constexpr const char* kVersion = "0.1.0";

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;

struct ScanRow {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::int64_t embedding_dimension = 0;
  std::int64_t expected_dimension = 0;
  bool symmetric = false;
  bool cyclotomic = false;
  bool agree = false;
};

/// One row per n in [n_min, n_max]; rows are computed on `workers` threads
/// and returned in ascending n. Throws std::invalid_argument when the range
/// leaves the family domain or is empty.
std::vector<ScanRow> scan_family(std::int64_t t, std::int64_t n_min, std::int64_t n_max, unsigned workers);

/// Worker count: explicit request if positive, else CYCLOSEMI_WORKERS, else
/// the hardware concurrency.
unsigned resolve_workers(int requested);

/// Entry point of the `cyclosemi` command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclosemi
