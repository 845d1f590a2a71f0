#ifndef EDGERING_JSON_IO_HPP
#define EDGERING_JSON_IO_HPP

#include "json.hpp"

#include "edgering/betti.hpp"
#include "edgering/scan.hpp"

namespace edgering {

nlohmann::json report_to_json(const DepthReport& report, bool include_timings = true);
nlohmann::json record_to_json(const ScanRecord& record, bool include_timings = false);
nlohmann::json summary_to_json(const ScanSummary& summary);
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json homology_to_json(const HomologyDims& dims);
nlohmann::json checks_to_json(int k, const std::vector<PaperCheckResult>& checks);

}  // namespace edgering

#endif
