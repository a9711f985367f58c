#ifndef SPECTREE_REPORT_IO_HPP
#define SPECTREE_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "spectree/spectrum.hpp"
#include "spectree/verify.hpp"

namespace spectree {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { kJson, kCsv, kText };

ReportFormat parse_report_format(const std::string& name);

/// JSON document for one report. Timing lives in its own "timing"
/// section so deterministic comparisons can drop it wholesale.
nlohmann::json report_to_json(const VerificationReport& report);

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        bool include_timing = true);

/// Spectrum serialization used by `analyze` and `family`: polynomials in
/// both human form and low-to-high coefficient arrays, each root with a
/// 12-digit decimal approximation (presentational only).
nlohmann::json spectrum_to_json(const FactoredSpectrum& s);
std::string spectrum_to_text(const FactoredSpectrum& s);

}  // namespace spectree

#endif  // SPECTREE_REPORT_IO_HPP
