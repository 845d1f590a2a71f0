#ifndef EDGERING_SCAN_HPP
#define EDGERING_SCAN_HPP

#include <optional>

#include "edgering/depth.hpp"

namespace edgering {

struct ScanOptions {
  DepthOptions depth{};
  int jobs = 1;
  bool include_timings = false;  // timings break byte-for-byte determinism
};

enum class ScanStatus { Ok, GuardSkipped, Error };

std::string to_string(ScanStatus status);

/// One record per input line, in input order.
struct ScanRecord {
  std::size_t line = 0;  // 1-based
  std::string graph6;
  ScanStatus status = ScanStatus::Ok;
  bool filtered = false;  // not connected+nonbipartite: no depth computed
  int d = 0, r = 0, krull = 0;
  std::optional<DepthReport> report;
  std::string message;
};

struct ScanSummary {
  std::size_t lines = 0, scanned = 0, filtered = 0, guard_skipped = 0, errors = 0;
  std::size_t exact_count = 0, inexact_count = 0;
  std::optional<Int> min_depth_lower;      // over completed records
  std::optional<Int> min_certified_depth;  // over exact records
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

/// Streams graph6 records, filters to connected nonbipartite graphs, and
/// runs a depth report per graph. Guard trips degrade a record to
/// guard-skipped (the Krull dimension still bounds the depth from above);
/// parse failures become error records.
ScanResult scan_catalog(const std::vector<std::string>& lines, const ScanOptions& opts);

}  // namespace edgering

#endif
