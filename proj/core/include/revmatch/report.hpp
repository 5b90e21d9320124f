#pragma once

#include <string>
#include <vector>

#include "revmatch/harness.hpp"

namespace revmatch {

struct ReportOptions {
  /// Write 0 in the wall_ms column so reruns with one seed are byte-identical.
  bool deterministic_timing = false;
};

/// Header line followed by one row per record, in record order.
std::string to_csv(const std::vector<BenchRecord>& records, ReportOptions options = {});
std::string csv_header();

/// Per (equiv, n, mode, algorithm) group: trials, successes and mean query counts.
std::string summary(const std::vector<BenchRecord>& records);

/// Throws std::runtime_error on I/O failure.
void write_csv_file(const std::string& path, const std::vector<BenchRecord>& records, ReportOptions options = {});

}  // namespace revmatch
