#include "edgering/json_io.hpp"

namespace edgering {

using nlohmann::json;

json report_to_json(const DepthReport& report, bool include_timings) {
  json witnesses = json::array();
  for (const DepthCertificate& cert : report.certificates)
    witnesses.push_back({{"s", cert.s}, {"j", cert.j}, {"dim", cert.dim}});
  json j = {
      {"graph", report.graph_id},
      {"d", report.d},
      {"r", report.r},
      {"krull_dim", report.krull},
      {"depth_lower", report.depth_lower},
      {"depth_upper", report.depth_upper},
      {"exact", report.exact},
      {"order", report.order_name},
      {"field", report.field_name},
      {"pd_initial", report.pd_initial},
      {"upper_certified", report.upper_certified},
      {"witnesses", witnesses},
  };
  if (include_timings) {
    json timings = json::object();
    for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;
    j["timings_ms"] = timings;
  }
  return j;
}

json record_to_json(const ScanRecord& record, bool include_timings) {
  json j = {
      {"line", record.line},
      {"graph6", record.graph6},
      {"status", to_string(record.status)},
      {"filtered", record.filtered},
  };
  if (record.status != ScanStatus::Error) {
    j["d"] = record.d;
    j["r"] = record.r;
    if (!record.filtered) j["krull_dim"] = record.krull;
  }
  if (record.report)
    j["report"] = report_to_json(*record.report, include_timings);
  else
    j["report"] = nullptr;
  if (!record.message.empty()) j["message"] = record.message;
  return j;
}

json summary_to_json(const ScanSummary& summary) {
  json j = {
      {"lines", summary.lines},
      {"scanned", summary.scanned},
      {"filtered", summary.filtered},
      {"guard_skipped", summary.guard_skipped},
      {"errors", summary.errors},
      {"exact", summary.exact_count},
      {"inexact", summary.inexact_count},
  };
  j["min_depth_lower"] = summary.min_depth_lower ? json(*summary.min_depth_lower) : json(nullptr);
  j["min_certified_depth"] =
      summary.min_certified_depth ? json(*summary.min_certified_depth) : json(nullptr);
  return j;
}

json betti_to_json(const BettiTable& table) {
  json triples = json::array();
  for (const auto& [key, dim] : table.entries()) {
    const auto& [i, a] = key;
    triples.push_back({{"i", i}, {"degree", a}, {"dim", dim}});
  }
  return {{"convention", "quotient"}, {"pd", table.pd()}, {"entries", triples}};
}

json homology_to_json(const HomologyDims& dims) {
  json by_index = json::object();
  for (int j = -1; j <= dims.max_index(); ++j) by_index[std::to_string(j)] = dims.at(j);
  return by_index;
}

json checks_to_json(int k, const std::vector<PaperCheckResult>& checks) {
  json arr = json::array();
  bool all = true;
  for (const PaperCheckResult& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all = all && c.pass;
  }
  return {{"k", k}, {"all_pass", all}, {"checks", arr}};
}

}  // namespace edgering
