// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lamnum/harness.hpp"
#include "lamnum/numerals.hpp"
#include "lamnum/parser.hpp"
#include "lamnum/reduction.hpp"
#include "support/oracles.hpp"

using namespace lamnum;
namespace lt = lamnum::oracle;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  // A report must pass with every case Equal or Holds.
  void require(const CheckReport& r) {
    require(r.pass() && r.unknown() == 0, r.subject() + describe(r));
  }
  static std::string describe(const CheckReport& r) {
    std::ostringstream s;
    s << ": " << r.passed() << " passed, " << r.failed() << " failed, " << r.unknown() << " unknown";
    if (const CheckCase* c = r.first_non_pass()) s << ", first: " << c->label;
    return s.str();
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void contracts(Outcome& o, const NumeralSystem& s, std::uint64_t upto) {
  if (s.successor) o.require(check_successor(s, *s.successor, upto));
  if (s.predecessor) o.require(check_predecessor(s, *s.predecessor, upto));
  if (s.zero_test) o.require(check_zero_test(s, *s.zero_test, upto));
}

void barendregt_system(Outcome& o) {
  const auto t0 = Clock::now();
  const NumeralSystem s = builtin_system("barendregt");
  o.require(s.successor && s.predecessor && s.zero_test, "all three combinators present");
  contracts(o, s, 50);
  const double t = seconds_since(t0);
  o.require(t < 5.0, "took " + std::to_string(t) + " s");
}

void church_system(Outcome& o) {
  const NumeralSystem s = builtin_system("church");
  o.require(s.successor && s.predecessor && s.zero_test, "all three combinators present");
  contracts(o, s, 50);
}

void system_a(Outcome& o) {
  const NumeralSystem s = builtin_system("a");
  o.require(s.successor && s.predecessor, "S and P present");
  o.require(!s.zero_test, "zero_test absent");
  contracts(o, s, 50);
}

void system_b(Outcome& o) {
  const NumeralSystem s = builtin_system("b");
  o.require(s.successor && s.zero_test, "S and Z present");
  o.require(!s.predecessor, "predecessor absent");
  contracts(o, s, 50);
  const Term sb0 = Term::app(*s.successor, bprime_numeral(0));
  o.require(beta_eta_eq(sb0, bprime_numeral(1)).kind == EqVerdict::Kind::Distinct, "S_b b'_0 distinct from b'_1");
  o.require(beta_eta_eq(sb0, bprime_numeral(2)).kind == EqVerdict::Kind::Equal, "S_b b'_0 equal to b'_2");
}

void tilde_system(Outcome& o) {
  const NumeralSystem s = builtin_system("tilde");
  o.require(s.successor && s.predecessor && s.zero_test, "all three combinators present");
  contracts(o, s, 30);
  for (std::uint64_t n = 1; n < 30; ++n) {
    const ReductionOutcome r = beta_eta_normalize(Term::app(*s.zero_test, tilde_numeral(n)));
    o.require(r.normal() && alpha_eq(r.term, mk_F()), "Z tilde_" + std::to_string(n) + " normalizes to F");
  }
}

void system_c(Outcome& o) {
  const NumeralSystem builtin = builtin_system("c");
  o.require(!builtin.successor, "successor absent");
  o.require(builtin.numeral(3) == c_numeral(3, church_sequence()), "default sequence is Church");
  for (const NumeralSystem& s : {builtin, c_system(barendregt_sequence())}) {
    o.require(s.predecessor && s.zero_test, "P and Z present");
    contracts(o, s, 50);
  }
}

// Random U with a head reduction of some length h <= 50, V its h-th state and a
// random substitution sigma: head reduction of sigma(U) must reach sigma(V)
// after exactly h steps. sigma is applied with the named substitution, which
// never touches the nameless engine.
Term driver_term(lt::Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 25)(rng);
  switch (kind(rng)) {
    case 0:
      return lt::random_term(rng, size);
    case 1: {
      // (\x.B) A1 .. Ak: at least one head redex up front.
      const Term body = lt::random_term(rng, size);
      return apply(Term::lam(lt::pick(rng, lt::name_pool()), body),
                   {lt::random_term(rng, 1 + rng() % 8), lt::random_term(rng, 1 + rng() % 8)});
    }
    default: {
      // church(n) (\y.y) R: about n + 2 head steps before R is reached.
      const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, 48)(rng);
      return apply(church(n), {mk_I(), lt::random_term(rng, size)});
    }
  }
}

void substitution_lemma(Outcome& o) {
  lt::Rng rng(20240901);
  int instances = 0;
  int violations = 0;
  int long_runs = 0;
  while (instances < 500) {
    const Term u = driver_term(rng);
    const HeadReduction full = head_reduce(u, Fuel(60), TraceMode::Full);
    const std::uint64_t max_h = std::min<std::uint64_t>(50, full.trace.length);
    const std::uint64_t h = std::uniform_int_distribution<std::uint64_t>(0, max_h)(rng);
    const Term v = full.trace.states[h];

    Substitution sigma;
    for (const auto& name : free_vars(u)) {
      if (rng() % 2 == 0) sigma.emplace(name, lt::random_term(rng, 1 + rng() % 10));
    }
    const Term su = substitute(u, sigma);
    const Term sv = substitute(v, sigma);
    const HeadReduction run = head_reduce(su, Fuel(std::max<std::uint64_t>(h, 1)), TraceMode::Full);
    const bool ok = run.trace.length >= h && alpha_eq(run.trace.states[h], sv);
    if (!ok) {
      ++violations;
      if (violations == 1) o.detail << " [first violation: " << pretty(u) << " with h = " << h << "]";
    }
    if (h >= 20) ++long_runs;
    ++instances;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.require(long_runs >= 50, "only " + std::to_string(long_runs) + " instances with h >= 20");
  o.detail << " (" << instances << " instances, " << long_runs << " with h >= 20)";
}

void lemma_one(Outcome& o) {
  for (const char* name : {"barendregt", "church", "b"}) {
    const NumeralSystem s = builtin_system(name);
    o.require(s.zero_test && s.discriminator, std::string(name) + " has Z and a discriminator");
    if (!s.zero_test || !s.discriminator) continue;
    const Term phi = phi_from_zero_test(s, *s.zero_test);
    o.require(check_zero_test(s, zero_test_from_phi(s, phi, *s.discriminator), 20));
  }
}

void theorem_five(Outcome& o) {
  const NumeralSystem church = builtin_system("church");
  const CheckReport k = check_definable(church, church_k_term(), k_function(), grid(2, 11));
  o.require(k.cases().size() == 121, "121 grid cases");
  o.require(k.passed() == k.cases().size(), "every case Equal");
  o.require(k);
  const DerivedCombinators d = spz_from_k(church, church_k_term(), swap_discriminator(*church.discriminator));
  o.require(check_successor(church, d.successor, 20));
  o.require(check_predecessor(church, d.predecessor, 20));
  o.require(check_zero_test(church, d.zero_test, 20));
}

void engine_hygiene(Outcome& o) {
  lt::Rng rng(77);
  int round_trip_failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const Term t = lt::random_term(rng, std::uniform_int_distribution<std::size_t>(1, 200)(rng));
    if (!(parse_term(pretty(t)) == t)) ++round_trip_failures;
  }
  o.require(round_trip_failures == 0, std::to_string(round_trip_failures) + " round-trip failures");

  const std::vector<std::string> small{"x", "y"};
  int alpha_mismatches = 0;
  int alpha_equal = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const Term a = lt::random_term(rng, n, small);
    std::vector<std::string> scope;
    const Term b = lt::random_term(rng, n, scope, small, small);
    const bool expected = lt::naive_alpha_eq(a, b);
    alpha_equal += expected;
    if (alpha_eq(a, b) != expected) ++alpha_mismatches;
  }
  o.require(alpha_mismatches == 0, std::to_string(alpha_mismatches) + " alpha mismatches");
  o.require(alpha_equal > 0, "no alpha-equal pairs sampled");

  int eta_inputs = 0;
  int eta_failures = 0;
  for (int i = 0; i < 2000; ++i) {
    Term t = lt::random_term(rng, std::uniform_int_distribution<std::size_t>(1, 40)(rng));
    // Wrap in eta-expansions so eta redexes are common.
    if (i % 2 == 0) t = Term::lam("w", Term::app(t, Term::var("w")));
    const ReductionOutcome b = beta_normalize(t, Fuel(2000));
    if (!b.normal()) continue;
    ++eta_inputs;
    if (!is_beta_eta_normal(eta_normalize(b.term))) ++eta_failures;
  }
  o.require(eta_failures == 0, std::to_string(eta_failures) + " eta failures");
  o.detail << " (" << eta_inputs << " beta-normal inputs for eta)";
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Barendregt S, P, Z for n < 50 in under 5 s", barendregt_system},
      {2, "Church S, P, Z for n < 50", church_system},
      {3, "system a: S and P for n < 50, zero test absent", system_a},
      {4, "system b: S and Z for n < 50, predecessor absent, b' sanity", system_b},
      {5, "tilde S, Z, P for n < 30, Z tilde_n alpha-equal to F", tilde_system},
      {6, "system c: P and Z for n < 50 under two sequences, successor absent", system_c},
      {7, "head reduction commutes with substitution (500 instances)", substitution_lemma},
      {8, "zero test round trip through the zero indicator", lemma_one},
      {9, "k on the 11 x 11 grid, derived S, P, Z for n < 20", theorem_five},
      {10, "parser round trip, alpha oracle, eta normal forms", engine_hygiene},
  };

  const auto start = Clock::now();
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %2d: %s (%.2f s) %s%s\n", c.number, o.ok ? "PASS" : "FAIL", seconds_since(t0), c.title,
                o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  const double total = seconds_since(start);
  const bool in_time = total < 60.0;
  std::printf("total: %.2f s (%s the 60 s budget)\n", total, in_time ? "within" : "over");
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 && in_time ? 0 : 1;
}
