#include "lamnum/reduction.hpp"

#include <algorithm>
#include <utility>

namespace lamnum {

Fuel::Fuel(std::uint64_t max_steps) : max_steps(max_steps) {
  if (max_steps == 0) throw std::invalid_argument("fuel must be at least 1");
}

const char* to_string(EqVerdict::Kind kind) noexcept {
  switch (kind) {
    case EqVerdict::Kind::Equal: return "Equal";
    case EqVerdict::Kind::Distinct: return "Distinct";
    case EqVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

struct Budget {
  std::uint64_t remaining;
  std::uint64_t used = 0;
  bool starved = false;

  bool take() {
    if (remaining == 0) {
      starved = true;
      return false;
    }
    --remaining;
    ++used;
    return true;
  }
};

// Splits (H A1 ... An) into H and A1..An.
IndexTerm unwind(const IndexTerm& t, std::vector<IndexTerm>& args) {
  const IndexTerm* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->argument());
    cur = &cur->function();
  }
  std::reverse(args.begin(), args.end());
  return *cur;
}

IndexTerm rewind(IndexTerm head, const std::vector<IndexTerm>& args, std::size_t from) {
  for (std::size_t i = from; i < args.size(); ++i) head = IndexTerm::app(std::move(head), args[i]);
  return head;
}

// Normal order: the head redex first, then the arguments left to right once
// the head is a variable. This visits redexes in the same order as repeated
// leftmost-outermost single steps.
IndexTerm normalize(IndexTerm t, Budget& budget) {
  for (;;) {
    if (t.is_lam()) return IndexTerm::lam(normalize(t.body(), budget), t.name());
    if (!t.is_app()) return t;
    std::vector<IndexTerm> args;
    IndexTerm head = unwind(t, args);
    if (head.is_lam()) {
      if (!budget.take()) return t;
      t = rewind(instantiate(head.body(), args[0]), args, 1);
      continue;
    }
    for (IndexTerm& a : args) a = normalize(a, budget);
    return rewind(std::move(head), args, 0);
  }
}

bool beta_normal(const IndexTerm& t) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
    case IndexTerm::Kind::Free:
      return true;
    case IndexTerm::Kind::Lam:
      return beta_normal(t.body());
    case IndexTerm::Kind::App:
      return !t.function().is_lam() && beta_normal(t.function()) && beta_normal(t.argument());
  }
  return false;
}

bool occurs_loose(const IndexTerm& t, std::uint32_t index) {
  if (t.binder_demand() <= index) return false;
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
      return t.index() == index;
    case IndexTerm::Kind::Free:
      return false;
    case IndexTerm::Kind::Lam:
      return occurs_loose(t.body(), index + 1);
    case IndexTerm::Kind::App:
      return occurs_loose(t.function(), index) || occurs_loose(t.argument(), index);
  }
  return false;
}

bool is_eta_redex(const IndexTerm& lam) {
  const IndexTerm& body = lam.body();
  if (!body.is_app()) return false;
  const IndexTerm& arg = body.argument();
  return arg.kind() == IndexTerm::Kind::Bound && arg.index() == 0 && !occurs_loose(body.function(), 0);
}

bool beta_eta_normal(const IndexTerm& t) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
    case IndexTerm::Kind::Free:
      return true;
    case IndexTerm::Kind::Lam:
      return !is_eta_redex(t) && beta_eta_normal(t.body());
    case IndexTerm::Kind::App:
      return !t.function().is_lam() && beta_eta_normal(t.function()) && beta_eta_normal(t.argument());
  }
  return false;
}

// Bottom-up: once the body is eta-normal, contracting \x.(M x) leaves M,
// which is already eta-normal, so a single pass reaches the fixpoint.
IndexTerm eta(const IndexTerm& t, std::uint64_t& count) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
    case IndexTerm::Kind::Free:
      return t;
    case IndexTerm::Kind::App:
      return IndexTerm::app(eta(t.function(), count), eta(t.argument(), count));
    case IndexTerm::Kind::Lam: {
      IndexTerm lam = IndexTerm::lam(eta(t.body(), count), t.name());
      if (!is_eta_redex(lam)) return lam;
      ++count;
      return shift(lam.body().function(), -1, 0);
    }
  }
  return t;
}

struct EngineOutcome {
  ReductionStatus status;
  IndexTerm term;
  std::uint64_t steps;
  std::uint64_t eta_steps;
};

EngineOutcome run_beta(const IndexTerm& t, Fuel fuel) {
  Budget budget{fuel.max_steps};
  IndexTerm result = normalize(t, budget);
  const auto status = budget.starved ? ReductionStatus::OutOfFuel : ReductionStatus::Normal;
  return {status, std::move(result), budget.used, 0};
}

EngineOutcome run_beta_eta(const IndexTerm& t, Fuel fuel) {
  EngineOutcome out = run_beta(t, fuel);
  if (out.status == ReductionStatus::Normal) out.term = eta(out.term, out.eta_steps);
  return out;
}

ReductionOutcome to_outcome(const EngineOutcome& e) {
  return ReductionOutcome{e.status, from_indexed(e.term), e.steps, e.eta_steps};
}

bool head_normal(const IndexTerm& t) {
  const IndexTerm* cur = &t;
  while (cur->is_lam()) cur = &cur->body();
  if (!cur->is_app()) return true;
  while (cur->is_app()) cur = &cur->function();
  return !cur->is_lam();
}

}  // namespace

std::optional<IndexTerm> beta_step_normal_order(const IndexTerm& t) {
  switch (t.kind()) {
    case IndexTerm::Kind::Bound:
    case IndexTerm::Kind::Free:
      return std::nullopt;
    case IndexTerm::Kind::Lam:
      if (auto b = beta_step_normal_order(t.body())) return IndexTerm::lam(std::move(*b), t.name());
      return std::nullopt;
    case IndexTerm::Kind::App:
      if (t.function().is_lam()) return instantiate(t.function().body(), t.argument());
      if (auto f = beta_step_normal_order(t.function())) return IndexTerm::app(std::move(*f), t.argument());
      if (auto a = beta_step_normal_order(t.argument())) return IndexTerm::app(t.function(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Term> beta_step_normal_order(const Term& t) {
  if (auto next = beta_step_normal_order(to_indexed(t))) return from_indexed(*next);
  return std::nullopt;
}

ReductionOutcome beta_normalize(const Term& t, Fuel fuel) { return to_outcome(run_beta(to_indexed(t), fuel)); }

Term eta_normalize(const Term& t) {
  const IndexTerm indexed = to_indexed(t);
  if (!beta_normal(indexed)) throw NotBetaNormal();
  std::uint64_t count = 0;
  return from_indexed(eta(indexed, count));
}

ReductionOutcome beta_eta_normalize(const Term& t, Fuel fuel) {
  return to_outcome(run_beta_eta(to_indexed(t), fuel));
}

bool is_beta_normal(const Term& t) { return beta_normal(to_indexed(t)); }

bool is_beta_eta_normal(const Term& t) { return beta_eta_normal(to_indexed(t)); }

Comparison compare(const Term& lhs, const Term& rhs, Fuel fuel) {
  const EngineOutcome l = run_beta_eta(to_indexed(lhs), fuel);
  const EngineOutcome r = run_beta_eta(to_indexed(rhs), fuel);
  EqVerdict verdict{EqVerdict::Kind::Unknown, {}};
  if (l.status == ReductionStatus::Normal && r.status == ReductionStatus::Normal) {
    verdict.kind = l.term == r.term ? EqVerdict::Kind::Equal : EqVerdict::Kind::Distinct;
  } else {
    const std::string budget = std::to_string(fuel.max_steps);
    if (l.status != ReductionStatus::Normal && r.status != ReductionStatus::Normal) {
      verdict.reason = "neither side normalized within " + budget + " steps";
    } else if (l.status != ReductionStatus::Normal) {
      verdict.reason = "left side did not normalize within " + budget + " steps";
    } else {
      verdict.reason = "right side did not normalize within " + budget + " steps";
    }
  }
  return Comparison{std::move(verdict), to_outcome(l), to_outcome(r)};
}

EqVerdict beta_eta_eq(const Term& lhs, const Term& rhs, Fuel fuel) { return compare(lhs, rhs, fuel).verdict; }

HeadShape head_position(const Term& t) {
  HeadShape shape{HeadShape::Kind::HeadNormalForm, 0, std::nullopt};
  const Term* cur = &t;
  while (cur->is_lam()) {
    ++shape.abstractions;
    cur = &cur->body();
  }
  const Term* innermost = nullptr;
  while (cur->is_app()) {
    innermost = cur;
    cur = &cur->function();
  }
  if (innermost != nullptr && cur->is_lam()) {
    shape.kind = HeadShape::Kind::HeadRedex;
    shape.redex = *innermost;
  }
  return shape;
}

std::optional<IndexTerm> head_step(const IndexTerm& t) {
  if (t.is_lam()) {
    if (auto b = head_step(t.body())) return IndexTerm::lam(std::move(*b), t.name());
    return std::nullopt;
  }
  if (!t.is_app()) return std::nullopt;
  std::vector<IndexTerm> args;
  IndexTerm head = unwind(t, args);
  if (!head.is_lam()) return std::nullopt;
  return rewind(instantiate(head.body(), args[0]), args, 1);
}

HeadReduction head_reduce(const Term& t, Fuel fuel, TraceMode mode) {
  IndexTerm cur = to_indexed(t);
  std::vector<IndexTerm> states{cur};
  std::uint64_t length = 0;
  while (length < fuel.max_steps) {
    auto next = head_step(cur);
    if (!next) break;
    cur = std::move(*next);
    ++length;
    if (mode == TraceMode::Full) states.push_back(cur);
  }
  if (mode == TraceMode::Endpoints) states.push_back(cur);

  HeadReduction out{head_normal(cur) ? HeadReduction::Status::Done : HeadReduction::Status::OutOfFuel, {}};
  out.trace.length = length;
  out.trace.states.reserve(states.size());
  for (const IndexTerm& s : states) out.trace.states.push_back(from_indexed(s));
  return out;
}

Solvability is_solvable(const Term& t, Fuel fuel) {
  const HeadReduction r = head_reduce(t, fuel, TraceMode::Endpoints);
  if (r.done()) return {Solvability::Kind::Solvable, r.trace.length};
  return {Solvability::Kind::Unknown, 0};
}

}  // namespace lamnum
