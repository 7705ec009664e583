// lamnum: command-line front end for the numeral-system workbench.
//
// Exit codes: 0 pass / normal / Equal, 1 fail / Distinct / input error,
// 2 fuel exhausted at top level, 3 inconclusive or combinator absent.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lamnum/harness.hpp"
#include "lamnum/numerals.hpp"
#include "lamnum/parser.hpp"
#include "lamnum/reduction.hpp"
#include "lamnum/report_json.hpp"

namespace {

using namespace lamnum;
using Json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFail = 1, kFuel = 2, kInconclusive = 3 };

struct CliConfig {
  std::uint64_t fuel = kDefaultFuel;
  std::string defs_path;
  bool prelude = false;
  bool json = false;
  bool trace = false;
  std::uint64_t upto = 50;
};

Program load_env(const CliConfig& cfg) {
  Program env;
  if (cfg.prelude) env = prelude();
  if (!cfg.defs_path.empty()) {
    std::ifstream in(cfg.defs_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read definitions file '" + cfg.defs_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    env.extend(parse_program(buf.str(), env));
  }
  return env;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int exit_for(Overall o) {
  switch (o) {
    case Overall::Pass: return kOk;
    case Overall::Fail: return kFail;
    case Overall::Inconclusive: return kInconclusive;
  }
  return kFail;
}

void print_report(const CheckReport& r) {
  std::cout << r.subject() << ": " << to_string(r.overall()) << " (passed " << r.passed() << ", failed "
            << r.failed() << ", unknown " << r.unknown() << ")\n";
  for (const CheckCase& c : r.cases()) {
    if (c.verdict == CaseVerdict::Equal || c.verdict == CaseVerdict::Holds) continue;
    std::cout << "  " << to_string(c.verdict) << ": " << c.label;
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    std::cout << '\n';
    if (c.witness) std::cout << "    got " << *c.witness << '\n';
  }
}

int report_and_exit(const CheckReport& r, const CliConfig& cfg) {
  if (cfg.json) {
    emit(to_json(r));
  } else {
    print_report(r);
  }
  return exit_for(r.overall());
}

int cmd_eval(const std::string& text, const CliConfig& cfg) {
  const Term t = parse_term(text, load_env(cfg));
  const ReductionOutcome out = beta_eta_normalize(t, Fuel(cfg.fuel));
  if (cfg.json) {
    Json j;
    j["format"] = kReportFormat;
    j["status"] = out.normal() ? "normal" : "out_of_fuel";
    j["term"] = pretty(out.term);
    j["steps"] = out.steps;
    j["eta_steps"] = out.eta_steps;
    emit(j);
  } else {
    std::cout << pretty(out.term) << '\n';
    std::cout << (out.normal() ? "normal form" : "out of fuel") << " after " << out.steps << " beta steps";
    if (out.eta_steps) std::cout << " and " << out.eta_steps << " eta steps";
    std::cout << '\n';
  }
  return out.normal() ? kOk : kFuel;
}

int cmd_numeral(const std::string& system, std::uint64_t n, const CliConfig& cfg) {
  const NumeralSystem sys = builtin_system(system);
  const std::string text = pretty(sys.numeral(n));
  if (cfg.json) {
    Json j;
    j["format"] = kReportFormat;
    j["system"] = system;
    j["n"] = n;
    j["term"] = text;
    emit(j);
  } else {
    std::cout << text << '\n';
  }
  return kOk;
}

CheckReport absent(const std::string& subject, const std::string& what) {
  CheckReport r(subject);
  r.add(CheckCase{what + " absent", CaseVerdict::Absent, 0, std::nullopt, {}});
  return r;
}

int cmd_check(const std::string& system, const std::string& which, const CliConfig& cfg) {
  const NumeralSystem sys = builtin_system(system);
  const Fuel fuel(cfg.fuel);
  auto succ = [&] {
    return sys.successor ? check_successor(sys, *sys.successor, cfg.upto, fuel)
                         : absent(sys.name + " successor", "successor");
  };
  auto pred = [&] {
    return sys.predecessor ? check_predecessor(sys, *sys.predecessor, cfg.upto, fuel)
                           : absent(sys.name + " predecessor", "predecessor");
  };
  auto zero = [&] {
    return sys.zero_test ? check_zero_test(sys, *sys.zero_test, cfg.upto, fuel)
                         : absent(sys.name + " zero test", "zero_test");
  };
  if (which == "system") return report_and_exit(check_system(sys, cfg.upto, fuel), cfg);
  if (which == "succ") return report_and_exit(succ(), cfg);
  if (which == "pred") return report_and_exit(pred(), cfg);
  if (which == "zero") return report_and_exit(zero(), cfg);

  CheckReport all(sys.name + " all");
  all.merge(check_system(sys, cfg.upto, fuel), "system: ");
  all.merge(succ(), "succ: ");
  all.merge(pred(), "pred: ");
  all.merge(zero(), "zero: ");
  return report_and_exit(all, cfg);
}

int cmd_head(const std::string& text, const CliConfig& cfg) {
  const Term t = parse_term(text, load_env(cfg));
  const HeadReduction r = head_reduce(t, Fuel(cfg.fuel), cfg.trace ? TraceMode::Full : TraceMode::Endpoints);
  if (cfg.json) {
    Json j;
    j["format"] = kReportFormat;
    j["status"] = r.done() ? "head_normal_form" : "out_of_fuel";
    j["h"] = r.trace.length;
    j["term"] = pretty(r.trace.end());
    if (cfg.trace) {
      Json states = Json::array();
      for (const Term& s : r.trace.states) states.push_back(pretty(s));
      j["trace"] = std::move(states);
    }
    emit(j);
  } else {
    if (cfg.trace) {
      for (std::size_t i = 0; i < r.trace.states.size(); ++i) {
        std::cout << i << ": " << pretty(r.trace.states[i]) << '\n';
      }
    }
    std::cout << (r.done() ? "head normal form: " : "out of fuel at: ") << pretty(r.trace.end()) << '\n';
    std::cout << "h = " << r.trace.length << '\n';
  }
  return r.done() ? kOk : kFuel;
}

int cmd_eq(const std::string& lhs, const std::string& rhs, const CliConfig& cfg) {
  const Program env = load_env(cfg);
  const EqVerdict v = beta_eta_eq(parse_term(lhs, env), parse_term(rhs, env), Fuel(cfg.fuel));
  if (cfg.json) {
    Json j;
    j["format"] = kReportFormat;
    j["verdict"] = to_string(v.kind);
    if (!v.reason.empty()) j["reason"] = v.reason;
    emit(j);
  } else {
    std::cout << to_string(v.kind);
    if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
    std::cout << '\n';
  }
  switch (v.kind) {
    case EqVerdict::Kind::Equal: return kOk;
    case EqVerdict::Kind::Distinct: return kFail;
    case EqVerdict::Kind::Unknown: return kInconclusive;
  }
  return kFail;
}

NumericFunction function_named(const std::string& name) {
  if (name == "id") return identity_function();
  if (name == "succ") return successor_function();
  if (name == "pred") return predecessor_function();
  if (name == "nonzero") return zero_indicator_function();
  if (name == "k") return k_function();
  throw std::invalid_argument("unknown function '" + name + "' (expected id, succ, pred, nonzero or k)");
}

int cmd_definable(const std::string& system, const std::string& text, const std::string& fn,
                  const CliConfig& cfg) {
  const NumeralSystem sys = builtin_system(system);
  const NumericFunction phi = function_named(fn);
  const Term fterm = parse_term(text, load_env(cfg));
  return report_and_exit(check_definable(sys, fterm, phi, grid(phi.arity, cfg.upto), Fuel(cfg.fuel)), cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda-calculus numeral systems: reduce terms, build numerals, check combinators"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--fuel", cfg.fuel, "Maximum beta steps per reduction")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--upto", cfg.upto, "Check bound")->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
  app.add_option("--defs", cfg.defs_path, "Definitions file (name = term; ...)");
  app.add_flag("--prelude", cfg.prelude, "Preload I, T, F and the builtin combinators");
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_flag("--trace", cfg.trace, "Print every head-reduction state");

  std::string term_a;
  std::string term_b;
  std::string system;
  std::string which = "all";
  std::string function;
  std::uint64_t n = 0;

  auto* eval = app.add_subcommand("eval", "Beta-eta normal form of a term");
  eval->add_option("term", term_a)->required();

  auto* numeral = app.add_subcommand("numeral", "Print the n-th numeral of a system");
  numeral->add_option("system", system)->required();
  numeral->add_option("n", n)->required();

  auto* check = app.add_subcommand("check", "Check a system's numerals and combinators");
  check->add_option("system", system)->required();
  check->add_option("which", which, "all, system, succ, pred or zero")
      ->check(CLI::IsMember({"all", "system", "succ", "pred", "zero"}));

  auto* head = app.add_subcommand("head", "Head-reduce a term and report h");
  head->add_option("term", term_a)->required();

  auto* eq = app.add_subcommand("eq", "Compare two terms up to beta-eta");
  eq->add_option("lhs", term_a)->required();
  eq->add_option("rhs", term_b)->required();

  auto* definable = app.add_subcommand("definable", "Check that a term defines a numeric function");
  definable->add_option("system", system)->required();
  definable->add_option("term", term_a)->required();
  definable->add_option("function", function, "id, succ, pred, nonzero or k")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(term_a, cfg);
    if (*numeral) return cmd_numeral(system, n, cfg);
    if (*check) return cmd_check(system, which, cfg);
    if (*head) return cmd_head(term_a, cfg);
    if (*eq) return cmd_eq(term_a, term_b, cfg);
    if (*definable) return cmd_definable(system, term_a, function, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kFail;
}
