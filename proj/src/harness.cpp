#include "lamnum/harness.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamnum/index_term.hpp"
#include "lamnum/parser.hpp"

namespace lamnum {

namespace {

std::string show(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

// \n.body(n) with n fresh for the given terms.
template <typename Body>
Term lambda_over(std::initializer_list<Term> terms, Body body) {
  std::set<std::string> avoid;
  for (const Term& t : terms) {
    const auto fv = free_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  const std::string n = fresh_name("n", avoid);
  return Term::lam(n, body(Term::var(n)));
}

}  // namespace

CheckReport check_system(const NumeralSystem& sys, std::uint64_t upto, Fuel /*fuel*/) {
  if (upto < 2) throw std::invalid_argument("check_system needs upto >= 2");
  CheckReport report(sys.name + " numerals");
  std::vector<IndexTerm> seen;
  for (std::uint64_t n = 0; n < upto; ++n) {
    const Term d = sys.numeral(n);
    const std::string tag = "d_" + std::to_string(n);

    const auto fv = free_vars(d);
    CheckCase closed{tag + " closed", fv.empty() ? CaseVerdict::Holds : CaseVerdict::Violated, 0, {}, {}};
    if (!fv.empty()) closed.witness = pretty(d);
    report.add(std::move(closed));

    const bool normal = is_beta_eta_normal(d);
    CheckCase nf{tag + " beta-eta-normal", normal ? CaseVerdict::Holds : CaseVerdict::Violated, 0, {}, {}};
    if (!normal) nf.witness = pretty(d);
    report.add(std::move(nf));

    const IndexTerm indexed = to_indexed(d);
    auto clash = std::find(seen.begin(), seen.end(), indexed);
    CheckCase distinct{tag + " distinct from earlier numerals",
                       clash == seen.end() ? CaseVerdict::Holds : CaseVerdict::Violated, 0, {}, {}};
    if (clash != seen.end()) {
      distinct.witness = pretty(d);
      distinct.note = "alpha-equal to d_" + std::to_string(clash - seen.begin());
    }
    report.add(std::move(distinct));
    seen.push_back(indexed);
  }
  return report;
}

CheckReport check_successor(const NumeralSystem& sys, const Term& s, std::uint64_t upto, Fuel fuel) {
  CheckReport report(sys.name + " successor");
  for (std::uint64_t n = 0; n < upto; ++n) {
    const std::string label = "S d_" + std::to_string(n) + " = d_" + std::to_string(n + 1);
    report.add(case_from(label, compare(Term::app(s, sys.numeral(n)), sys.numeral(n + 1), fuel)));
  }
  return report;
}

CheckReport check_predecessor(const NumeralSystem& sys, const Term& p, std::uint64_t upto, Fuel fuel) {
  CheckReport report(sys.name + " predecessor");
  for (std::uint64_t n = 0; n < upto; ++n) {
    const std::string label = "P d_" + std::to_string(n + 1) + " = d_" + std::to_string(n);
    report.add(case_from(label, compare(Term::app(p, sys.numeral(n + 1)), sys.numeral(n), fuel)));
  }
  return report;
}

CheckReport check_zero_test(const NumeralSystem& sys, const Term& z, std::uint64_t upto, Fuel fuel) {
  CheckReport report(sys.name + " zero test");
  report.add(case_from("Z d_0 = T", compare(Term::app(z, sys.numeral(0)), mk_T(), fuel)));
  for (std::uint64_t n = 0; n < upto; ++n) {
    const std::string label = "Z d_" + std::to_string(n + 1) + " = F";
    report.add(case_from(label, compare(Term::app(z, sys.numeral(n + 1)), mk_F(), fuel)));
  }
  return report;
}

CheckReport check_definable(const NumeralSystem& sys, const Term& fterm, const NumericFunction& phi,
                            const std::vector<Point>& points, Fuel fuel) {
  CheckReport report(sys.name + " defines " + phi.name);
  for (const Point& p : points) {
    if (p.size() != phi.arity) throw std::invalid_argument("point " + show(p) + " does not match arity");
    Term applied = fterm;
    for (std::uint64_t n : p) applied = Term::app(std::move(applied), sys.numeral(n));
    const std::uint64_t value = phi(p);
    const std::string label = phi.name + show(p) + " = " + std::to_string(value);
    report.add(case_from(label, compare(applied, sys.numeral(value), fuel)));
  }
  return report;
}

std::vector<Point> grid(std::size_t arity, std::uint64_t bound) {
  std::vector<Point> out;
  if (bound == 0) return out;
  Point p(arity, 0);
  for (;;) {
    out.push_back(p);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++p[i] < bound) break;
      p[i] = 0;
      if (i == 0) return out;
    }
    if (arity == 0) return out;
  }
}

NumericFunction identity_function() {
  return {"id", 1, [](std::span<const std::uint64_t> a) { return a[0]; }};
}

NumericFunction successor_function() {
  return {"succ", 1, [](std::span<const std::uint64_t> a) { return a[0] + 1; }};
}

NumericFunction predecessor_function() {
  return {"pred", 1, [](std::span<const std::uint64_t> a) { return a[0] == 0 ? 0 : a[0] - 1; }};
}

NumericFunction zero_indicator_function() {
  return {"nonzero", 1, [](std::span<const std::uint64_t> a) -> std::uint64_t { return a[0] == 0 ? 0 : 1; }};
}

NumericFunction k_function() {
  return {"k", 2, [](std::span<const std::uint64_t> a) -> std::uint64_t {
            const std::uint64_t n = a[0];
            const std::uint64_t m = a[1];
            if (m == 0) return n + 1;
            return n > m ? n - m : m - n;
          }};
}

Term phi_from_zero_test(const NumeralSystem& sys, const Term& z) {
  const Term d0 = sys.numeral(0);
  const Term d1 = sys.numeral(1);
  return lambda_over({z, d0, d1}, [&](const Term& n) { return apply(z, {n, d0, d1}); });
}

Term zero_test_from_phi(const NumeralSystem& /*sys*/, const Term& fphi, const Term& w01) {
  return lambda_over({fphi, w01}, [&](const Term& n) { return Term::app(w01, Term::app(fphi, n)); });
}

Term swap_discriminator(const Term& w) {
  return lambda_over({w}, [&](const Term& n) { return apply(w, {n, mk_F(), mk_T()}); });
}

Term church_k_term() {
  const NumeralSystem church_sys = builtin_system("church");
  Program env;
  env.define("S", *church_sys.successor);
  env.define("P", *church_sys.predecessor);
  env.define("Z", *church_sys.zero_test);
  env.define("Add", parse_term("\\a.\\b.\\f.\\x.a f (b f x)"));
  // a - b truncated at zero: apply P to a, b times.
  env.define("Sub", parse_term("\\a.\\b.b P a", env));
  return parse_term("\\n.\\m.Z m (S n) (Add (Sub n m) (Sub m n))", env);
}

DerivedCombinators spz_from_k(const NumeralSystem& sys, const Term& kterm, const Term& w10) {
  const Term d0 = sys.numeral(0);
  const Term d1 = sys.numeral(1);
  return DerivedCombinators{
      lambda_over({kterm, d0}, [&](const Term& n) { return apply(kterm, {n, d0}); }),
      lambda_over({kterm, d1}, [&](const Term& n) { return apply(kterm, {n, d1}); }),
      lambda_over({kterm, w10}, [&](const Term& n) { return Term::app(w10, apply(kterm, {n, n})); }),
  };
}

Program prelude() {
  Program p;
  p.define("I", mk_I());
  p.define("T", mk_T());
  p.define("F", mk_F());
  for (const std::string& name : builtin_system_names()) {
    const NumeralSystem sys = builtin_system(name);
    if (sys.successor) p.define(name + "_S", *sys.successor);
    if (sys.predecessor) p.define(name + "_P", *sys.predecessor);
    if (sys.zero_test) p.define(name + "_Z", *sys.zero_test);
    if (sys.discriminator) p.define(name + "_W", *sys.discriminator);
  }
  p.define("church_K", church_k_term());
  return p;
}

}  // namespace lamnum
