#include "lamnum/report_json.hpp"

namespace lamnum {

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const CheckCase& c : report.cases()) {
    nlohmann::ordered_json j;
    j["label"] = c.label;
    j["verdict"] = to_string(c.verdict);
    j["steps"] = c.steps;
    if (c.witness) j["witness"] = *c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    cases.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["format"] = kReportFormat;
  out["subject"] = report.subject();
  out["cases"] = std::move(cases);
  out["counts"] = {{"passed", report.passed()}, {"failed", report.failed()}, {"unknown", report.unknown()}};
  out["overall"] = to_string(report.overall());
  return out;
}

}  // namespace lamnum
