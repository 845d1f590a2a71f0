#include "edgering/scan.hpp"

#include <algorithm>

namespace edgering {

std::string to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::Ok: return "ok";
    case ScanStatus::GuardSkipped: return "guard-skipped";
    case ScanStatus::Error: return "error";
  }
  return "error";
}

ScanResult scan_catalog(const std::vector<std::string>& lines, const ScanOptions& opts) {
  ScanResult result;
  result.records.resize(lines.size());

  parallel_for(lines.size(), opts.jobs, [&](std::size_t idx) {
    ScanRecord& rec = result.records[idx];
    rec.line = idx + 1;
    rec.graph6 = lines[idx];
    try {
      Graph g = parse_graph6(lines[idx]);
      rec.d = g.vertex_count();
      rec.r = g.edge_count();
      bool eligible = g.connected() && !g.bipartite();
      if (!eligible) {
        rec.filtered = true;
        return;
      }
      rec.krull = krull_dim(g);
      try {
        rec.report = depth_report(g, opts.depth, lines[idx]);
      } catch (const GuardLimit& guard) {
        rec.status = ScanStatus::GuardSkipped;
        rec.message = guard.what();
      }
    } catch (const Error& err) {
      rec.status = ScanStatus::Error;
      rec.message = err.what();
    }
  });

  ScanSummary& s = result.summary;
  s.lines = lines.size();
  for (const ScanRecord& rec : result.records) {
    switch (rec.status) {
      case ScanStatus::Error:
        ++s.errors;
        continue;
      case ScanStatus::GuardSkipped:
        ++s.guard_skipped;
        continue;
      case ScanStatus::Ok: break;
    }
    if (rec.filtered) {
      ++s.filtered;
      continue;
    }
    ++s.scanned;
    const DepthReport& rep = *rec.report;
    if (!s.min_depth_lower || rep.depth_lower < *s.min_depth_lower) s.min_depth_lower = rep.depth_lower;
    if (rep.exact) {
      ++s.exact_count;
      if (!s.min_certified_depth || rep.depth_lower < *s.min_certified_depth)
        s.min_certified_depth = rep.depth_lower;
    } else {
      ++s.inexact_count;
    }
  }
  return result;
}

}  // namespace edgering
