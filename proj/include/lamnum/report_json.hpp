#pragma once

#include <json.hpp>

#include "lamnum/report.hpp"

namespace lamnum {

/// Version of the serialized report layout.
inline constexpr int kReportFormat = 1;

/// {"format": 1, "subject", "cases": [{"label", "verdict", "steps",
/// "witness"?, "note"?}], "counts": {"passed", "failed", "unknown"},
/// "overall"}. Field order is fixed so output is byte-stable.
nlohmann::ordered_json to_json(const CheckReport& report);

}  // namespace lamnum
