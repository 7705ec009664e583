#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamnum/reduction.hpp"

namespace lamnum {

/// Verdict of a single case. Equal/Holds pass, Distinct/Violated fail,
/// Unknown/Absent are inconclusive.
enum class CaseVerdict { Equal, Distinct, Unknown, Holds, Violated, Absent };

const char* to_string(CaseVerdict v) noexcept;
CaseVerdict from_eq(const EqVerdict& v) noexcept;

struct CheckCase {
  std::string label;
  CaseVerdict verdict;
  std::uint64_t steps = 0;
  /// Pretty-printed term backing a non-passing verdict.
  std::optional<std::string> witness;
  std::string note;
};

enum class Overall { Pass, Fail, Inconclusive };

const char* to_string(Overall o) noexcept;

class CheckReport {
 public:
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  void add(CheckCase c);
  /// Appends every case of `other`, prefixing labels with `prefix`.
  void merge(const CheckReport& other, const std::string& prefix);

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<CheckCase>& cases() const noexcept { return cases_; }

  std::size_t passed() const noexcept { return passed_; }
  std::size_t failed() const noexcept { return failed_; }
  std::size_t unknown() const noexcept { return unknown_; }

  /// Pass iff nothing failed and nothing is unknown; Fail if anything failed.
  Overall overall() const noexcept;
  bool pass() const noexcept { return overall() == Overall::Pass; }

  /// First case that did not pass, if any.
  const CheckCase* first_non_pass() const noexcept;

 private:
  std::string subject_;
  std::vector<CheckCase> cases_;
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
  std::size_t unknown_ = 0;
};

/// Builds a case from a comparison: the witness is the left normal form (or
/// partial term) whenever the verdict is not Equal.
CheckCase case_from(std::string label, const Comparison& cmp);

}  // namespace lamnum
