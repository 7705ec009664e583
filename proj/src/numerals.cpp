#include "lamnum/numerals.hpp"

#include <algorithm>

#include "lamnum/parser.hpp"

namespace lamnum {

namespace {

const Program& base_env() {
  static const Program env = [] {
    Program p;
    p.define("I", mk_I());
    p.define("T", mk_T());
    p.define("F", mk_F());
    return p;
  }();
  return env;
}

Term term(std::string_view text) { return parse_term(text, base_env()); }

const Term& church_successor() {
  static const Term s = term("\\n.\\f.\\x.f (n f x)");
  return s;
}

Term church_predecessor() {
  // Pairs step <k, k-1> to <k+1, k>; the second component is the answer.
  Program env = base_env();
  env.define("S", church_successor());
  env.define("Zero", church(0));
  env.define("U", parse_term("\\a.<S (a T), a T>", env));
  return parse_term("\\n.n U <Zero, Zero> F", env);
}

}  // namespace

Term church(std::uint64_t n) {
  Term body = Term::var("x");
  for (std::uint64_t i = 0; i < n; ++i) body = Term::app(Term::var("f"), std::move(body));
  return abstract({"f", "x"}, std::move(body));
}

Term barendregt(std::uint64_t n) {
  Term t = mk_I();
  for (std::uint64_t i = 0; i < n; ++i) t = mk_pair(mk_F(), t);
  return t;
}

Term a_numeral(std::uint64_t n) {
  Term t = mk_I();
  for (std::uint64_t i = n; i >= 1; --i) t = Term::lam("x" + std::to_string(i), std::move(t));
  return t;
}

Term b_numeral(std::uint64_t n) {
  if (n == 0) return mk_pair(mk_T(), mk_I());
  return mk_pair(mk_F(), a_numeral(n - 1));
}

Term bprime_numeral(std::uint64_t n) {
  if (n == 0) return b_numeral(1);
  if (n == 1) return b_numeral(0);
  return b_numeral(n);
}

Term tilde_numeral(std::uint64_t n) {
  if (n == 0) return mk_I();
  Term body = Term::var("x");
  for (std::uint64_t i = 0; i < n; ++i) body = Term::app(std::move(body), Term::var("x"));
  return Term::lam("x", std::move(body));
}

Term c_numeral(std::uint64_t n, const SequenceSpec& e) {
  Term t = mk_I();
  for (std::uint64_t i = 1; i <= n; ++i) t = mk_pair(t, e.element(i));
  return t;
}

SequenceSpec church_sequence() { return {"church", [](std::uint64_t n) { return church(n); }}; }

SequenceSpec barendregt_sequence() { return {"barendregt", [](std::uint64_t n) { return barendregt(n); }}; }

NumeralSystem c_system(SequenceSpec e) {
  NumeralSystem sys;
  sys.name = "c";
  sys.numeral = [e = std::move(e)](std::uint64_t n) { return c_numeral(n, e); };
  sys.predecessor = term("\\n.n T");
  sys.zero_test = term("\\n.n (\\x.\\y.I) T F T");
  sys.discriminator = sys.zero_test;
  return sys;
}

const std::vector<std::string>& builtin_system_names() {
  static const std::vector<std::string> names{"church", "barendregt", "a", "b", "bprime", "tilde", "c"};
  return names;
}

NumeralSystem builtin_system(std::string_view name) {
  NumeralSystem sys;
  sys.name = std::string(name);
  if (name == "church") {
    sys.numeral = [](std::uint64_t n) { return church(n); };
    sys.successor = church_successor();
    sys.predecessor = church_predecessor();
    sys.zero_test = term("\\n.n (\\x.F) T");
    sys.discriminator = sys.zero_test;
  } else if (name == "barendregt") {
    sys.numeral = [](std::uint64_t n) { return barendregt(n); };
    sys.successor = term("\\x.<F, x>");
    sys.predecessor = term("\\x.x F");
    sys.zero_test = term("\\x.x T");
    sys.discriminator = sys.zero_test;
  } else if (name == "a") {
    sys.numeral = [](std::uint64_t n) { return a_numeral(n); };
    sys.successor = term("\\n.\\x.n");
    sys.predecessor = term("\\n.n I");
    // I K X Y = K X Y and (\x1.I) K X Y = X Y.
    sys.discriminator = term("\\n.n (\\p.\\q.T) (\\u.F) I");
  } else if (name == "b") {
    Program env = base_env();
    env.define("a0", a_numeral(0));
    sys.numeral = [](std::uint64_t n) { return b_numeral(n); };
    sys.successor = parse_term("\\n.<F, n T a0 (\\x.n F)>", env);
    sys.zero_test = term("\\n.n T");
    sys.discriminator = sys.zero_test;
  } else if (name == "bprime") {
    sys.numeral = [](std::uint64_t n) { return bprime_numeral(n); };
    sys.discriminator = term("\\n.n T F T");
  } else if (name == "tilde") {
    sys.numeral = [](std::uint64_t n) { return tilde_numeral(n); };
    sys.successor = term("\\n.\\x.n x x");
    sys.zero_test = term("\\n.n (\\x.\\y.y x) I I T");
    // U and V sit inside the outer \x so that V's x is that binder.
    sys.predecessor = term("\\n.\\x.n (\\y.y (\\a.\\b.\\c.\\d.d a (c x)) I) F");
    sys.discriminator = sys.zero_test;
  } else if (name == "c") {
    return c_system(church_sequence());
  } else {
    throw UnknownSystem(std::string(name));
  }
  return sys;
}

Term church_predecessor_as_printed() {
  Program env = base_env();
  env.define("S", church_successor());
  env.define("Zero", church(0));
  env.define("U", parse_term("\\a.<S (a T), a F>", env));
  return parse_term("\\n.n U <Zero, Zero> T", env);
}

CheckReport is_generator(const Term& a, const SequenceSpec& u, std::uint64_t upto, Fuel fuel) {
  CheckReport report("generator for " + u.name);
  report.add(case_from("A I = U_1", compare(Term::app(a, mk_I()), u.element(1), fuel)));
  std::vector<Term> prefix;
  for (std::uint64_t n = 1; n < upto; ++n) {
    prefix.push_back(u.element(n));
    const std::string label = "A <U_1..U_" + std::to_string(n) + "> = U_" + std::to_string(n + 1);
    report.add(case_from(label, compare(Term::app(a, mk_tuple(prefix)), u.element(n + 1), fuel)));
  }
  return report;
}

}  // namespace lamnum
