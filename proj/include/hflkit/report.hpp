#ifndef HFLKIT_REPORT_HPP
#define HFLKIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hflkit/half_int.hpp"

namespace hflkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Output of one CLI command. JSON keys are sorted, so dumps are byte-stable.
struct ReportDocument {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<CheckResult> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

enum class OutputFormat { Json, Table };

/// "json" or "table"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& text);

std::string render(const ReportDocument& doc, OutputFormat format);
std::string render_table(const ReportDocument& doc);

// Commands. Precondition failures throw std::invalid_argument.

ReportDocument cmd_hfl(int n, std::optional<HalfInt> spinc);
ReportDocument cmd_whitehead(int n);
ReportDocument cmd_alexander_torus(int n);
ReportDocument cmd_alexander_satellite(const std::string& companion, const std::string& pattern,
                                       std::int64_t winding);
ReportDocument cmd_kauffman(int n, bool list);
ReportDocument cmd_kauffman_pd(const std::string& pd_text, bool list);
ReportDocument cmd_homology(const nlohmann::json& complex);
ReportDocument cmd_complex(int n, HalfInt spinc);

/// Every family check for n = 1..max_n, one worker per n.
ReportDocument cmd_verify(int max_n);

}  // namespace hflkit

#endif  // HFLKIT_REPORT_HPP
