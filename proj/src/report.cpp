#include "lamnum/report.hpp"

#include "lamnum/parser.hpp"

namespace lamnum {

const char* to_string(CaseVerdict v) noexcept {
  switch (v) {
    case CaseVerdict::Equal: return "equal";
    case CaseVerdict::Distinct: return "distinct";
    case CaseVerdict::Unknown: return "unknown";
    case CaseVerdict::Holds: return "holds";
    case CaseVerdict::Violated: return "violated";
    case CaseVerdict::Absent: return "absent";
  }
  return "?";
}

CaseVerdict from_eq(const EqVerdict& v) noexcept {
  switch (v.kind) {
    case EqVerdict::Kind::Equal: return CaseVerdict::Equal;
    case EqVerdict::Kind::Distinct: return CaseVerdict::Distinct;
    case EqVerdict::Kind::Unknown: return CaseVerdict::Unknown;
  }
  return CaseVerdict::Unknown;
}

const char* to_string(Overall o) noexcept {
  switch (o) {
    case Overall::Pass: return "pass";
    case Overall::Fail: return "fail";
    case Overall::Inconclusive: return "inconclusive";
  }
  return "?";
}

void CheckReport::add(CheckCase c) {
  switch (c.verdict) {
    case CaseVerdict::Equal:
    case CaseVerdict::Holds:
      ++passed_;
      break;
    case CaseVerdict::Distinct:
    case CaseVerdict::Violated:
      ++failed_;
      break;
    case CaseVerdict::Unknown:
    case CaseVerdict::Absent:
      ++unknown_;
      break;
  }
  cases_.push_back(std::move(c));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (CheckCase c : other.cases()) {
    c.label = prefix + c.label;
    add(std::move(c));
  }
}

Overall CheckReport::overall() const noexcept {
  if (failed_ > 0) return Overall::Fail;
  if (unknown_ > 0) return Overall::Inconclusive;
  return Overall::Pass;
}

const CheckCase* CheckReport::first_non_pass() const noexcept {
  for (const CheckCase& c : cases_) {
    if (c.verdict != CaseVerdict::Equal && c.verdict != CaseVerdict::Holds) return &c;
  }
  return nullptr;
}

CheckCase case_from(std::string label, const Comparison& cmp) {
  CheckCase c{std::move(label), from_eq(cmp.verdict), cmp.lhs.steps + cmp.rhs.steps, std::nullopt,
              cmp.verdict.reason};
  if (!cmp.verdict.equal()) {
    constexpr std::size_t kMaxWitness = 4096;
    std::string w = pretty(cmp.lhs.term);
    if (w.size() > kMaxWitness) {
      w.resize(kMaxWitness);
      w += " ...";
    }
    c.witness = std::move(w);
  }
  return c;
}

}  // namespace lamnum
