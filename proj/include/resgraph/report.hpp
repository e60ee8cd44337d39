// report.hpp
// Text and JSON rendering of everything the tool computes.

#ifndef RESGRAPH_REPORT_HPP
#define RESGRAPH_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "resgraph/invariants.hpp"
#include "resgraph/verify.hpp"

namespace resgraph {

inline constexpr const char* kToolName = "resgraph";
inline constexpr const char* kToolVersion = "0.1.0";

struct HilbertRequest {
  long k = 1;
  HilbertSamuelValue value;
};

/// One command's worth of output. Absent parts render as JSON null and are
/// omitted from the text form.
struct ReportDocument {
  std::string command;
  const ResolutionGraph* graph = nullptr;
  Assumptions assumptions;
  std::optional<ValidationReport> validation;
  std::optional<ClassificationReport> classification;
  std::optional<GenusResult> genus;  // classify with --assume-gorenstein
  bool include_sequence = false;
  std::optional<InvariantReport> invariants;
  std::optional<HilbertRequest> hilbert;
  std::optional<std::vector<VerificationRow>> oracle;
};

/// Integers within 53 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json json_integer(const Integer& x);
nlohmann::ordered_json json_cycle(const Cycle& c);
nlohmann::ordered_json json_rational_cycle(const RationalCycle& c);

nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);

/// Single-line summary used by `batch`.
std::string summary_line(const std::string& name, const ClassificationReport& r);

std::string format_cycle(const Cycle& c);
std::string format_rational_cycle(const RationalCycle& c);
std::string format_pg(const PgVerdict& v);

}  // namespace resgraph

#endif  // RESGRAPH_REPORT_HPP
