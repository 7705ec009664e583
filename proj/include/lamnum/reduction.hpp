#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamnum/index_term.hpp"
#include "lamnum/term.hpp"

namespace lamnum {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// Upper bound on beta contractions for one reduction run.
struct Fuel {
  /// Throws std::invalid_argument when `max_steps` is 0.
  explicit Fuel(std::uint64_t max_steps = kDefaultFuel);

  std::uint64_t max_steps;
};

class NotBetaNormal : public std::invalid_argument {
 public:
  NotBetaNormal() : std::invalid_argument("eta_normalize needs a beta-normal term") {}
};

enum class ReductionStatus { Normal, OutOfFuel };

struct ReductionOutcome {
  ReductionStatus status;
  /// The normal form, or the partially reduced term when fuel ran out.
  Term term;
  /// Beta contractions performed.
  std::uint64_t steps = 0;
  /// Eta contractions performed, counted apart from `steps`.
  std::uint64_t eta_steps = 0;

  bool normal() const noexcept { return status == ReductionStatus::Normal; }
};

/// Contracts the leftmost-outermost beta redex; nullopt when `t` is beta-normal.
std::optional<Term> beta_step_normal_order(const Term& t);
std::optional<IndexTerm> beta_step_normal_order(const IndexTerm& t);

/// Normal-order reduction. Finds the beta normal form whenever one exists
/// and the fuel allows.
ReductionOutcome beta_normalize(const Term& t, Fuel fuel = Fuel{});

/// Contracts eta redexes to a fixpoint. Throws NotBetaNormal.
Term eta_normalize(const Term& t);

/// beta_normalize, then eta_normalize on the result if it is beta-normal.
ReductionOutcome beta_eta_normalize(const Term& t, Fuel fuel = Fuel{});

bool is_beta_normal(const Term& t);
bool is_beta_eta_normal(const Term& t);

struct EqVerdict {
  enum class Kind { Equal, Distinct, Unknown };

  Kind kind;
  /// Set for Unknown: which side ran out of fuel.
  std::string reason;

  bool equal() const noexcept { return kind == Kind::Equal; }
  friend bool operator==(const EqVerdict&, const EqVerdict&) = default;
};

const char* to_string(EqVerdict::Kind kind) noexcept;

/// Outcome of a beta-eta comparison together with both normalizations.
struct Comparison {
  EqVerdict verdict;
  ReductionOutcome lhs;
  ReductionOutcome rhs;
};

/// Each side is normalized with its own `fuel` budget.
Comparison compare(const Term& lhs, const Term& rhs, Fuel fuel = Fuel{});
EqVerdict beta_eta_eq(const Term& lhs, const Term& rhs, Fuel fuel = Fuel{});

// Head reduction.

/// Shape of \x1...\xn.(H V1 ... Vm).
struct HeadShape {
  enum class Kind { HeadRedex, HeadNormalForm };

  Kind kind;
  /// Number of leading abstractions.
  std::size_t abstractions = 0;
  /// The head redex (\x.U) V, when there is one.
  std::optional<Term> redex;
};

HeadShape head_position(const Term& t);

/// Contracts the head redex; nullopt for a head normal form.
std::optional<IndexTerm> head_step(const IndexTerm& t);

enum class TraceMode {
  /// Keep every intermediate term.
  Full,
  /// Keep only the first and last terms; long runs stay cheap.
  Endpoints,
};

struct HeadTrace {
  /// With TraceMode::Full, states[i] is the term after i steps and
  /// states.size() == length + 1. With Endpoints it holds {start, end}.
  std::vector<Term> states;
  std::uint64_t length = 0;

  const Term& start() const { return states.front(); }
  const Term& end() const { return states.back(); }
};

struct HeadReduction {
  enum class Status { Done, OutOfFuel };

  Status status;
  HeadTrace trace;

  bool done() const noexcept { return status == Status::Done; }
};

/// Head-reduces until a head normal form or until the fuel is spent.
/// Status is Done exactly when the last state is a head normal form.
HeadReduction head_reduce(const Term& t, Fuel fuel = Fuel{}, TraceMode mode = TraceMode::Endpoints);

/// Solvable(h) when head reduction terminates within fuel after h steps;
/// otherwise Unknown. Unsolvability is never claimed.
struct Solvability {
  enum class Kind { Solvable, Unknown };

  Kind kind;
  std::uint64_t head_steps = 0;

  bool solvable() const noexcept { return kind == Kind::Solvable; }
};

Solvability is_solvable(const Term& t, Fuel fuel = Fuel{});

}  // namespace lamnum
