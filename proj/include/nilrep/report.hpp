#ifndef NILREP_REPORT_HPP
#define NILREP_REPORT_HPP

// Serialization of verification reports.
//
// JSON layout:
//   {"version": 1,
//    "config": {...},
//    "cases": [{"case": name, "passed": bool,
//               "checks": [{"name", "passed", "trials", "witness"?: {...}}]}],
//    "verdict": bool}

#include "nilrep/gelfand.hpp"

#include <json.hpp>

#include <string>

namespace nilrep {

inline constexpr int kReportVersion = 1;

nlohmann::ordered_json to_json(const VerifyConfig& config);
VerifyConfig config_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const TheoremReport& report);
/// Throws Error(Parse) on a malformed document.
TheoremReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const DecompositionReport& report);

std::string render_text(const TheoremReport& report);

} // namespace nilrep

#endif
