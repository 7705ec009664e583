#include <gtest/gtest.h>

#include "lamnum/harness.hpp"
#include "lamnum/parser.hpp"
#include "lamnum/report_json.hpp"

using namespace lamnum;

namespace {

NumeralSystem degenerate() {
  NumeralSystem s;
  s.name = "degenerate";
  s.numeral = [](std::uint64_t) { return mk_I(); };
  return s;
}

std::vector<Point> unary(std::uint64_t bound) { return grid(1, bound); }

}  // namespace

TEST(CheckReport, OverallFollowsCounts) {
  CheckReport r("r");
  EXPECT_EQ(r.overall(), Overall::Pass);
  r.add({"a", CaseVerdict::Equal, 0, {}, {}});
  EXPECT_EQ(r.overall(), Overall::Pass);
  r.add({"b", CaseVerdict::Unknown, 0, {}, {}});
  EXPECT_EQ(r.overall(), Overall::Inconclusive);
  r.add({"c", CaseVerdict::Distinct, 0, {}, {}});
  EXPECT_EQ(r.overall(), Overall::Fail);
  EXPECT_EQ(r.passed() + r.failed() + r.unknown(), r.cases().size());
}

TEST(CheckReport, JsonLayout) {
  CheckReport r("demo");
  r.add({"ok", CaseVerdict::Equal, 3, {}, {}});
  r.add({"bad", CaseVerdict::Distinct, 4, std::string("\\x.x"), {}});
  EXPECT_EQ(to_json(r).dump(),
            R"({"format":1,"subject":"demo","cases":[{"label":"ok","verdict":"equal","steps":3},)"
            R"({"label":"bad","verdict":"distinct","steps":4,"witness":"\\x.x"}],)"
            R"("counts":{"passed":1,"failed":1,"unknown":0},"overall":"fail"})");
}

TEST(Grid, Enumerates) {
  EXPECT_EQ(grid(1, 3), (std::vector<Point>{{0}, {1}, {2}}));
  EXPECT_EQ(grid(2, 2), (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(grid(2, 11).size(), 121u);
}

TEST(CheckSystem, Examples) {
  EXPECT_TRUE(check_system(builtin_system("bprime"), 20).pass());
  const CheckReport deg = check_system(degenerate(), 3);
  EXPECT_EQ(deg.overall(), Overall::Fail);
  EXPECT_EQ(deg.failed(), 2u);
  EXPECT_EQ(deg.first_non_pass()->label, "d_1 distinct from earlier numerals");
  EXPECT_THROW(check_system(degenerate(), 1), std::invalid_argument);
}

TEST(CheckSystem, ChurchPassesExceptEtaAtOne) {
  const CheckReport r = check_system(builtin_system("church"), 20);
  EXPECT_EQ(r.failed(), 1u);
  EXPECT_EQ(r.cases().size(), 60u);
}

TEST(CheckSuccessor, Examples) {
  const NumeralSystem church = builtin_system("church");
  EXPECT_TRUE(check_successor(church, *church.successor, 30).pass());
  const NumeralSystem tilde = builtin_system("tilde");
  EXPECT_TRUE(check_successor(tilde, *tilde.successor, 30).pass());

  // S_b b_1 = b_2, but under b' index 0 holds b_1 and index 1 holds b_0.
  const CheckReport r = check_successor(builtin_system("bprime"), *builtin_system("b").successor, 2);
  EXPECT_EQ(r.overall(), Overall::Fail);
  EXPECT_EQ(r.cases()[0].verdict, CaseVerdict::Distinct);
  ASSERT_TRUE(r.cases()[0].witness.has_value());
  EXPECT_TRUE(alpha_eq(parse_term(*r.cases()[0].witness), b_numeral(2)));
}

TEST(CheckPredecessor, Examples) {
  const NumeralSystem a = builtin_system("a");
  EXPECT_TRUE(check_predecessor(a, *a.predecessor, 30).pass());
  const NumeralSystem church = builtin_system("church");
  EXPECT_TRUE(check_predecessor(church, *church.predecessor, 30).pass());
  const NumeralSystem tilde = builtin_system("tilde");
  EXPECT_TRUE(check_predecessor(tilde, *tilde.predecessor, 15).pass());
}

TEST(CheckZeroTest, Examples) {
  for (const char* name : {"barendregt", "c", "b"}) {
    const NumeralSystem s = builtin_system(name);
    const CheckReport r = check_zero_test(s, *s.zero_test, 30);
    EXPECT_TRUE(r.pass()) << name;
    EXPECT_EQ(r.cases().size(), 31u);
  }
}

TEST(CheckZeroTest, ConstantTrueFailsAboveZero) {
  const NumeralSystem s = builtin_system("barendregt");
  const CheckReport r = check_zero_test(s, parse_term("\\n.\\x.\\y.x"), 5);
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(r.failed(), 5u);
}

TEST(CheckDefinable, Examples) {
  const NumeralSystem church = builtin_system("church");
  EXPECT_TRUE(check_definable(church, *church.successor, successor_function(), unary(21)).pass());
  EXPECT_TRUE(check_definable(church, mk_I(), identity_function(), unary(21)).pass());
  const Term lemma = phi_from_zero_test(church, *church.zero_test);
  EXPECT_TRUE(alpha_eq(lemma, Term::lam("n", apply(*church.zero_test, {Term::var("n"), lamnum::church(0), lamnum::church(1)}))));
  EXPECT_TRUE(check_definable(church, lemma, zero_indicator_function(), unary(21)).pass());
}

TEST(CheckDefinable, IdentityEverywhere) {
  for (const std::string& name : builtin_system_names()) {
    EXPECT_TRUE(check_definable(builtin_system(name), mk_I(), identity_function(), unary(20)).pass()) << name;
  }
}

TEST(CheckDefinable, ArityMismatchThrows) {
  const NumeralSystem church = builtin_system("church");
  EXPECT_THROW(check_definable(church, mk_I(), identity_function(), {{1, 2}}), std::invalid_argument);
}

TEST(CheckDefinable, StarvedFuelNeverPasses) {
  const NumeralSystem church = builtin_system("church");
  const CheckReport r = check_definable(church, *church.successor, successor_function(), unary(5), Fuel(1));
  EXPECT_EQ(r.overall(), Overall::Inconclusive);
  EXPECT_FALSE(r.pass());
}

TEST(KFunction, Values) {
  const NumericFunction k = k_function();
  EXPECT_EQ(k.arity, 2u);
  auto at = [&](std::uint64_t n, std::uint64_t m) { return k(Point{n, m}); };
  EXPECT_EQ(at(4, 0), 5u);
  EXPECT_EQ(at(0, 0), 1u);
  EXPECT_EQ(at(3, 3), 0u);
  EXPECT_EQ(at(2, 5), 3u);
  EXPECT_EQ(at(5, 2), 3u);
  EXPECT_EQ(at(0, 1), 1u);
}

TEST(ChurchKTerm, Examples) {
  const Term k = church_k_term();
  EXPECT_TRUE(is_closed(k));
  EXPECT_TRUE(beta_eta_eq(apply(k, {church(4), church(0)}), church(5)).equal());
  EXPECT_TRUE(beta_eta_eq(apply(k, {church(2), church(5)}), church(3)).equal());
  EXPECT_TRUE(beta_eta_eq(apply(k, {church(7), church(7)}), church(0)).equal());
}

TEST(ChurchKTerm, SmallGrid) {
  const NumeralSystem church = builtin_system("church");
  EXPECT_TRUE(check_definable(church, church_k_term(), k_function(), grid(2, 6)).pass());
}

TEST(Lemma1, PhiFromZeroTest) {
  for (const char* name : {"barendregt", "church", "b"}) {
    const NumeralSystem s = builtin_system(name);
    const Term phi = phi_from_zero_test(s, *s.zero_test);
    EXPECT_TRUE(check_definable(s, phi, zero_indicator_function(), unary(21)).pass()) << name;
  }
}

TEST(Lemma1, ZeroTestFromPhi) {
  for (const char* name : {"church", "barendregt"}) {
    const NumeralSystem s = builtin_system(name);
    const Term phi = phi_from_zero_test(s, *s.zero_test);
    const Term z = zero_test_from_phi(s, phi, *s.zero_test);
    EXPECT_TRUE(check_zero_test(s, z, 20).pass()) << name;
  }
}

TEST(Lemma1, NonDiscriminatorFails) {
  const NumeralSystem s = builtin_system("church");
  const Term phi = phi_from_zero_test(s, *s.zero_test);
  const Term z = zero_test_from_phi(s, phi, parse_term("\\x.\\a.\\b.a"));
  const CheckReport r = check_zero_test(s, z, 5);
  EXPECT_EQ(r.cases()[0].verdict, CaseVerdict::Equal);
  for (std::size_t i = 1; i < r.cases().size(); ++i) EXPECT_EQ(r.cases()[i].verdict, CaseVerdict::Distinct);
}

TEST(Lemma1, RoundTripWithShippedDiscriminators) {
  for (const std::string& name : builtin_system_names()) {
    const NumeralSystem s = builtin_system(name);
    if (!s.zero_test) continue;
    const Term z = zero_test_from_phi(s, phi_from_zero_test(s, *s.zero_test), *s.discriminator);
    EXPECT_TRUE(check_zero_test(s, z, 20).pass()) << name;
  }
}

TEST(SwapDiscriminator, MapsOneToTrue) {
  const NumeralSystem church = builtin_system("church");
  const Term w10 = swap_discriminator(*church.discriminator);
  EXPECT_TRUE(beta_eta_eq(Term::app(w10, lamnum::church(0)), mk_F()).equal());
  EXPECT_TRUE(beta_eta_eq(Term::app(w10, lamnum::church(1)), mk_T()).equal());
  const Term direct = parse_term("\\n.n (\\x.\\a.\\b.a) (\\a.\\b.b)");
  EXPECT_TRUE(beta_eta_eq(Term::app(direct, lamnum::church(0)), mk_F()).equal());
  EXPECT_TRUE(beta_eta_eq(Term::app(direct, lamnum::church(1)), mk_T()).equal());
}

TEST(SpzFromK, ChurchClosure) {
  const NumeralSystem church = builtin_system("church");
  const Term w10 = parse_term("\\n.n (\\x.\\a.\\b.a) (\\a.\\b.b)");
  const DerivedCombinators d = spz_from_k(church, church_k_term(), w10);
  EXPECT_TRUE(check_successor(church, d.successor, 20).pass());
  EXPECT_TRUE(check_predecessor(church, d.predecessor, 20).pass());
  EXPECT_TRUE(check_zero_test(church, d.zero_test, 20).pass());
  EXPECT_TRUE(beta_eta_eq(Term::app(d.zero_test, lamnum::church(0)), mk_T()).equal());
  EXPECT_TRUE(beta_eta_eq(Term::app(d.successor, lamnum::church(6)), lamnum::church(7)).equal());
  // k(0, 1) = 1, so the derived predecessor sends 0 to 1.
  EXPECT_TRUE(beta_eta_eq(Term::app(d.predecessor, lamnum::church(0)), lamnum::church(1)).equal());
}

TEST(Prelude, ContainsBuiltins) {
  const Program p = prelude();
  EXPECT_EQ(*p.find("T"), mk_T());
  EXPECT_TRUE(p.find("church_K").has_value());
  EXPECT_TRUE(p.find("tilde_P").has_value());
  EXPECT_FALSE(p.find("a_Z").has_value());
  EXPECT_FALSE(p.find("bprime_S").has_value());
}
