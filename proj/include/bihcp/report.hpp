#pragma once

#include <string>

#include "json.hpp"

#include "bihcp/tolerance.hpp"

namespace bihcp {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Skeleton with every top-level key present in schema order.
Json make_report(const std::string& command, Json inputs, const ToleranceConfig& tol);

Json tolerances_to_json(const ToleranceConfig& tol);
ToleranceConfig tolerances_from_json(const Json& j);

void add_root(Json& report, const std::string& label, double value);
void add_warning(Json& report, const std::string& text);

/// Two-space indented JSON; doubles as %.17g, non-finite doubles as null.
std::string render_json(const Json& j);

/// Recomputes the verdict from residuals and tolerances alone. Throws
/// std::invalid_argument when the report lacks what the rule needs.
std::string rederive_verdict(const Json& report);

/// rederive_verdict(report) == report["verdict"], plus the same check on
/// any nested verdicts the command records.
bool report_consistent(const Json& report);

/// Verdict for a tension / bitension / (-4)-residual triple.
std::string staged_verdict(double tension, double bitension, double minus4, double tol,
                           double minimality_tol);

}  // namespace bihcp
