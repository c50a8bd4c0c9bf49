#include <gtest/gtest.h>

#include <sstream>

#include "ull/evaluator.hpp"
#include "ull/parser.hpp"
#include "ull/random.hpp"

namespace {

using ull::Count;
using ull::TruthValue;

ull::Environment example_env() {
  std::istringstream in("universe 100\nAmerican 0.5 20\nCrazy 0.3 10\n");
  return ull::parse_environment(in);
}

TruthValue eval(const std::string& text, const ull::Environment& env) { return ull::evaluate(ull::parse(text), env); }

TEST(Environment, ParsesCommentsAndInfinity) {
  std::istringstream in("# header\n\nuniverse 50  # people\nTall 0.7 inf\nCrazy 0.8 12.5\n");
  const auto env = ull::parse_environment(in);
  EXPECT_EQ(env.universe().size(), 50.0);
  EXPECT_EQ(*env.lookup("Tall"), TruthValue(0.7, Count::infinite()));
  EXPECT_EQ(*env.lookup("Crazy"), TruthValue(0.8, 12.5));
  EXPECT_FALSE(env.lookup("Short"));
}

TEST(Environment, RejectsMalformedInput) {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(ull::parse_environment(in), ull::EnvFormatError) << text;
  };
  bad("");
  bad("A 0.5 10\n");
  bad("universe 0\n");
  bad("universe 10\nA 1.5 3\n");
  bad("universe 10\nA 0.5 11\n");
  bad("universe 10\nA 0.5 -1\n");
  bad("universe 10\nA 0.5 3\nA 0.5 3\n");
  bad("universe 10\nT 0.5 3\n");
  bad("universe 10\nA 0.5\n");
}

TEST(Environment, ErrorNamesTheLine) {
  std::istringstream in("universe 10\nA 0.5 3\nB x 3\n");
  try {
    ull::parse_environment(in);
    FAIL();
  } catch (const ull::EnvFormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Evaluate, WorkedExample) {
  const auto env = example_env();
  EXPECT_EQ(eval("American & Crazy", env), TruthValue(0.3, 10.0));
  EXPECT_EQ(eval("American + Crazy", env), TruthValue(0.5, 20.0));
  EXPECT_EQ(eval("American * Crazy", env), TruthValue(0.15, 2.0));
  EXPECT_EQ(eval("American | Crazy", env), TruthValue(0.65, 28.0));
}

TEST(Evaluate, AtomIsItsBinding) { EXPECT_EQ(eval("Crazy", example_env()), TruthValue(0.3, 10.0)); }

TEST(Evaluate, ConstantsUseTheUniverse) {
  const auto env = example_env();
  EXPECT_EQ(eval("1", env), TruthValue(1.0, 100.0));
  EXPECT_EQ(eval("T", env), TruthValue(1.0, Count::infinite()));
  EXPECT_EQ(eval("0", env), TruthValue(0.0, 0.0));
  EXPECT_EQ(eval("F", env), TruthValue(0.0, 0.0));
}

TEST(Evaluate, LollipopIsParOfDual) {
  const auto env = example_env();
  EXPECT_EQ(eval("American -o Crazy", env), eval("American^ | Crazy", env));
  // 0.5 + 0.3 - 0.15, count 20 + 10 - 2
  EXPECT_EQ(eval("American -o Crazy", env), TruthValue(0.65, 28.0));
}

TEST(Evaluate, ExponentialsOnlyTouchCounts) {
  const auto env = example_env();
  EXPECT_EQ(eval("!Crazy", env), TruthValue(0.3, Count::infinite()));
  EXPECT_EQ(eval("!(American & Crazy)", env).count(), Count::infinite());
  EXPECT_EQ(eval("!American * !Crazy", env).count(), Count::infinite());
}

TEST(Evaluate, UnboundAtom) {
  try {
    eval("American * X", example_env());
    FAIL();
  } catch (const ull::UnboundAtom& e) {
    EXPECT_EQ(e.atom(), "X");
    EXPECT_STREQ(e.what(), "unbound atom X");
  }
}

TEST(EvaluateReport, ChildrenCarryTheirValues) {
  const auto r = ull::evaluate_report(ull::parse("American & Crazy"), example_env());
  EXPECT_EQ(r.value, TruthValue(0.3, 10.0));
  ASSERT_EQ(r.children.size(), 2u);
  EXPECT_EQ(r.children[0].value, TruthValue(0.5, 20.0));
  EXPECT_EQ(r.children[1].value, TruthValue(0.3, 10.0));
  EXPECT_TRUE(r.children[0].children.empty());
}

TEST(EvaluateReport, AgreesWithEvaluate) {
  ull::CounterRng rng(17, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto f = ull::random_formula(rng, 5, 4);
    const auto env = ull::random_environment(rng, 4, 100.0);
    ASSERT_EQ(ull::evaluate_report(f, env).value, ull::evaluate(f, env)) << ull::render(f);
  }
}

TEST(Evaluate, ParOverWithDistributesExactly) {
  ull::CounterRng rng(19, 0);
  const auto lhs = ull::parse("A | (B & C)");
  const auto rhs = ull::parse("(A | B) & (A | C)");
  for (int i = 0; i < 5000; ++i) {
    ull::Environment env(ull::UniverseConfig(100.0));
    for (const char* a : {"A", "B", "C"}) env.bind(a, TruthValue(rng.uniform01(), rng.uniform(0, 100)));
    const auto l = ull::evaluate(lhs, env), r = ull::evaluate(rhs, env);
    ASSERT_NEAR(l.strength(), r.strength(), 1e-12);
    ASSERT_NEAR(l.count().value(), r.count().value(), 1e-12);
  }
}

}  // namespace
