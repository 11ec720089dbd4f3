#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "palgeo/verify.hpp"

namespace palgeo {

/// One CSV line per check: body_id,check_name,lhs,rhs,slack,pass.
/// Numbers carry 17 significant digits; skipped rows have pass=skipped.
void write_checks_csv(std::ostream& out, const std::vector<CheckReport>& reports);
void write_sharpness_csv(std::ostream& out, const SharpnessReport& s);

/// Full single-body report: metrics, bounds and check rows.
std::string analysis_json(const CheckReport& report);

/// {corpus, seed, n, failures: [...], empirical_infima: {...}}.
std::string corpus_summary_json(std::string_view corpus, std::uint64_t seed, std::size_t n,
                                const CorpusResult& result, const ScanSummary* scan = nullptr);
std::string sharpness_json(const SharpnessReport& s);
std::string scan_json(std::string_view corpus, std::uint64_t seed, std::size_t n, const ScanSummary& scan);

}  // namespace palgeo
