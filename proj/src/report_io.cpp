#include "spectree/report_io.hpp"

#include <sstream>

#include "spectree/error.hpp"

namespace spectree {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  fail(ErrorKind::kInvalidArgument, "unknown report format: " + name);
}

namespace {

nlohmann::json entries_to_json(const std::vector<ReportEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const ReportEntry& e : entries)
    out.push_back({{"code", e.code}, {"detail", e.detail}});
  return out;
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "spectree"}, {"version", kToolVersion}};
  j["claim"] = report.claim;
  j["scope"] = report.scope;
  j["checked"] = report.checked;
  j["passed"] = report.passed();
  j["witnesses"] = entries_to_json(report.witnesses);
  j["violations"] = entries_to_json(report.violations);
  j["notes"] = report.notes;
  j["counters"] = report.counters;
  j["timing"] = {{"elapsed_seconds", report.elapsed_seconds}};
  return j;
}

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        bool include_timing) {
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::json j = report_to_json(report);
      if (!include_timing) j.erase("timing");
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::ostringstream out;
      out << "claim,kind,code,detail\n";
      auto row = [&](const std::string& kind, const ReportEntry& e) {
        auto quote = [](const std::string& s) {
          std::string q = "\"";
          for (char c : s) {
            if (c == '"') q += "\"\"";
            q += c;
          }
          q += "\"";
          return q;
        };
        out << report.claim << "," << kind << "," << quote(e.code) << ","
            << quote(e.detail) << "\n";
      };
      for (const ReportEntry& e : report.violations) row("violation", e);
      for (const ReportEntry& e : report.witnesses) row("witness", e);
      return out.str();
    }
    case ReportFormat::kText: {
      std::ostringstream out;
      out << (report.passed() ? "PASS" : "FAIL") << " " << report.claim << " ("
          << report.scope << "): checked " << report.checked << ", "
          << report.violations.size() << " violation(s), "
          << report.witnesses.size() << " witness(es)";
      if (include_timing) out << " [" << report.elapsed_seconds << "s]";
      out << "\n";
      for (const ReportEntry& e : report.violations)
        out << "  violation " << e.code << ": " << e.detail << "\n";
      for (const ReportEntry& e : report.witnesses)
        out << "  witness " << e.code << ": " << e.detail << "\n";
      for (const std::string& note : report.notes)
        out << "  note: " << note << "\n";
      return out.str();
    }
  }
  fail(ErrorKind::kInternal, "unhandled report format");
}

nlohmann::json spectrum_to_json(const FactoredSpectrum& s) {
  nlohmann::json classes = nlohmann::json::array();
  for (const EigenClass& c : s.classes()) {
    nlohmann::json jc;
    jc["min_poly"] = to_string(c.min_poly);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& v : c.min_poly.coeffs()) coeffs.push_back(v.get_str());
    jc["coefficients"] = coeffs;
    jc["multiplicity"] = c.multiplicity;
    nlohmann::json roots = nlohmann::json::array();
    for (size_t i = 0; i < c.roots.size(); ++i) {
      roots.push_back({{"index", i},
                       {"approx", decimal_approx(c.roots[i], 12)}});
    }
    jc["roots"] = roots;
    classes.push_back(std::move(jc));
  }
  nlohmann::json j;
  j["order"] = s.order();
  j["classes"] = classes;
  return j;
}

std::string spectrum_to_text(const FactoredSpectrum& s) {
  std::ostringstream out;
  out << "order " << s.order() << "\n";
  for (const EigenClass& c : s.classes()) {
    out << "  (" << to_string(c.min_poly) << ")^" << c.multiplicity
        << "  roots:";
    for (size_t i = 0; i < c.roots.size(); ++i)
      out << " " << decimal_approx(c.roots[i], 12);
    out << "\n";
  }
  return out.str();
}

}  // namespace spectree
