#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ull/checker.hpp"
#include "ull/eta.hpp"
#include "ull/nnf.hpp"
#include "ull/parser.hpp"
#include "ull/proof_parser.hpp"
#include "ull/random.hpp"

namespace {

namespace fs = std::filesystem;
using ull::Formula;
using ull::Rule;
using ull::Sequent;

Sequent seq(std::initializer_list<const char*> items) {
  std::vector<Formula> fs;
  for (const char* s : items) fs.push_back(ull::parse(s));
  return Sequent(fs);
}

ull::CheckResult check(const std::string& text) { return ull::check(ull::parse_proof(text)); }

void expect_invalid(const std::string& text, const std::string& rule, const std::string& path,
                    const std::string& message_part = "") {
  const auto r = check(text);
  ASSERT_FALSE(r.valid) << text;
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->rule, rule);
  EXPECT_EQ(r.failure->path, path);
  if (!message_part.empty()) {
    EXPECT_NE(r.failure->message.find(message_part), std::string::npos) << r.failure->message;
  }
}

TEST(Sequent, IsAMultisetInNegationNormalForm) {
  EXPECT_EQ(seq({"A", "B^"}), seq({"B^", "A"}));
  EXPECT_EQ(seq({"(A * B)^"}), seq({"A^ | B^"}));
  EXPECT_EQ(seq({"A", "A"}).count(Formula::atom("A")), 2u);
  EXPECT_EQ(Sequent::two_sided({ull::parse("A"), ull::parse("A -o B")}, {ull::parse("B")}),
            seq({"A^", "A * B^", "B"}));
}

TEST(ProofParser, Axiom) {
  const auto p = ull::parse_proof("(ax A)");
  EXPECT_EQ(p.rule, Rule::Ax);
  EXPECT_EQ(*p.principal, Formula::atom("A"));
  EXPECT_EQ(ull::check(p).proof->conclusion, seq({"A^", "A"}));
}

TEST(ProofParser, TensorSplit) {
  const auto p = ull::parse_proof("(tensor [A] [B] (ax A) (ax B))");
  EXPECT_EQ(p.rule, Rule::TensorR);
  ASSERT_TRUE(p.split);
  EXPECT_EQ(p.split->left, std::vector<Formula>{Formula::atom("A")});
  EXPECT_EQ(p.premises.size(), 2u);
}

TEST(ProofParser, SplitListsAcceptCommasOrSpaces) {
  const auto a = ull::parse_proof("(top [A, B * C, D])");
  const auto b = ull::parse_proof("(top [A B * C D])");
  EXPECT_EQ(a.context, b.context);
  EXPECT_EQ(a.context.size(), 3u);
}

TEST(ProofParser, ErrorsNameTheRule) {
  auto fails_with = [](const std::string& text, const std::string& part) {
    try {
      ull::parse_proof(text);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ull::SyntaxError& e) {
      EXPECT_NE(std::string(e.what()).find(part), std::string::npos) << e.what();
    }
  };
  fails_with("(tensor [A] [B] (ax A))", "rule 'tensor' expects 2 premise(s)");
  fails_with("(par (ax A))", "rule 'par' expects 1 argument(s)");
  fails_with("(ax A B)", "rule 'ax' expects 1 argument(s)");
  fails_with("(frobnicate A)", "unknown rule");
  fails_with("(ax A", "unterminated");
  fails_with("(ax A) (ax B)", "trailing input");
}

TEST(ProofParser, RenderRoundTrips) {
  const auto p = ull::parse_proof("(contract? ?A^ (tensor [?A^] [?A^] (derelict ?A^ (ax A)) (derelict ?A^ (ax A))))");
  EXPECT_EQ(ull::render(p),
            "(contract? [?A^] (tensor [?A^] [?A^] (derelict [?A^] (ax [A])) (derelict [?A^] (ax [A]))))");
  EXPECT_EQ(ull::check(ull::parse_proof(ull::render(p))).proof->conclusion, ull::check(p).proof->conclusion);
}

TEST(Checker, AxiomLedger) {
  const auto r = check("(ax A)");
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(r.ledger.tokens("A"), 1u);
  EXPECT_TRUE(r.ledger.reuse_events.empty());
}

TEST(Checker, ModusPonens) {
  const auto r = check("(par [A^ | (A * B^)] (tensor [A^] [B] (ax A) (ax B)))");
  ASSERT_TRUE(r.valid) << r.failure->describe();
  EXPECT_EQ(r.proof->conclusion, Sequent::two_sided({ull::parse("A * (A -o B)")}, {ull::parse("B")}));
  EXPECT_EQ(r.ledger.tokens("A"), 1u);
  EXPECT_EQ(r.ledger.tokens("B"), 1u);
}

TEST(Checker, CutComposes) {
  const auto r = check("(cut [A^, A * B^] [B] (tensor [A^] [B] (ax A) (ax B)) (ax B))");
  ASSERT_TRUE(r.valid) << r.failure->describe();
  EXPECT_EQ(r.proof->conclusion, seq({"A^", "A * B^", "B"}));
  EXPECT_EQ(r.ledger.atoms.at("B").cut_occurrences, 2u);
}

TEST(Checker, ContractionRecordsReuse) {
  const auto r = check("(contract? [?A^] (tensor [?A^] [?A^] (derelict [?A^] (ax A)) (derelict [?A^] (ax A))))");
  ASSERT_TRUE(r.valid) << r.failure->describe();
  ASSERT_EQ(r.ledger.reuse_events.size(), 1u);
  EXPECT_EQ(r.ledger.reuse_events[0].formula, ull::parse("?A^"));
  EXPECT_EQ(r.ledger.reuse_events[0].path, "root");
}

TEST(Checker, Units) {
  EXPECT_TRUE(check("(one)").valid);
  EXPECT_EQ(check("(bottom (one))").proof->conclusion, seq({"1", "F"}));
  EXPECT_EQ(check("(top [A, B])").proof->conclusion, seq({"A", "B", "T"}));
}

TEST(Checker, Violations) {
  expect_invalid("(contract? [A] (tensor [A] [A] (ax A) (ax A)))", "contract?", "root",
                 "contraction restricted to ?-formulas");
  expect_invalid("(weaken? [B] (ax A))", "weaken?", "root", "weakening restricted to ?-formulas");
  expect_invalid("(promote [!A] (ax A))", "promote", "root", "?-prefixed");
  expect_invalid("(derelict [?(A * B)] (ax [A * B]))", "ax", "root/0", "restricted to atoms");
  expect_invalid("(one [A])", "one", "root", "empty context");
  expect_invalid("(with [A & B] (ax A) (ax B))", "with", "root", "identical contexts");
  expect_invalid("(cut [A] [A] (ax A) (ax A))", "cut", "root", "not dual");
  expect_invalid("(par [A^ | (A * A)] (tensor |- [A^, A * A] [A^] [A^] (ax A) (ax A)))", "tensor", "root/0",
                 "share context");
  expect_invalid("(par [A * B] (ax A))", "par", "root");
  expect_invalid("(plus1 [A + B] (ax B))", "plus1", "root");
  expect_invalid("(tensor [A] [C] (ax A) (ax B))", "tensor", "root");
  expect_invalid("(tensor [A^] [B] [A] |- [B] (ax A) (ax B))", "tensor", "root", "declared conclusion");
}

TEST(Checker, DeterministicAcrossRuns) {
  const std::string text = "(with [B & C] (ax B) (ax C))";
  const auto a = check(text), b = check(text);
  EXPECT_EQ(a.valid, b.valid);
  EXPECT_EQ(a.failure->describe(), b.failure->describe());
}

TEST(Eta, IdentityProofsCheckForRandomFormulas) {
  ull::CounterRng rng(23, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto f = ull::nnf(ull::random_formula(rng, 4, 3));
    const auto r = ull::check(ull::identity_proof(f));
    ASSERT_TRUE(r.valid) << ull::render(f) << ": " << r.failure->describe();
    ASSERT_EQ(r.proof->conclusion, Sequent({f, ull::dual_of_normal(f)})) << ull::render(f);
    ASSERT_TRUE(r.ledger.reuse_events.empty());
  }
}

TEST(Annotate, AxiomValue) {
  ull::Environment env(ull::UniverseConfig(100.0));
  env.bind("A", ull::TruthValue(0.3, 10.0));
  const auto a = ull::tv_annotate(ull::parse_proof("(ax A)"), env);
  // A^ | A with A^ = (0.7, 10): 0.3 + 0.7 - 0.21, count 10 + 10 - 1
  EXPECT_NEAR(a.value.strength(), 0.79, 1e-15);
  EXPECT_EQ(a.value.count().value(), 19.0);
}

TEST(Annotate, Constants) {
  ull::Environment env(ull::UniverseConfig(100.0));
  EXPECT_EQ(ull::tv_annotate(ull::parse_proof("(top)"), env).value, ull::TruthValue(1.0, ull::Count::infinite()));
  EXPECT_EQ(ull::tv_annotate(ull::parse_proof("(one)"), env).value, ull::TruthValue(1.0, 100.0));
}

TEST(Annotate, RejectsInvalidProofs) {
  ull::Environment env(ull::UniverseConfig(100.0));
  env.bind("A", ull::TruthValue(0.3, 10.0));
  EXPECT_THROW(ull::tv_annotate(ull::parse_proof("(weaken? [A] (ax A))"), env), std::invalid_argument);
}

std::string expectation(const fs::path& p, const std::string& key) {
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    const auto tag = "; " + key + ": ";
    if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
  }
  return {};
}

TEST(Golden, ValidProofsCheckAndBalance) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(fs::path(ULL_DATA_DIR) / "proofs" / "valid")) {
    const auto r = ull::check(ull::load_proof(e.path().string()));
    ASSERT_TRUE(r.valid) << e.path() << ": " << r.failure->describe();
    EXPECT_TRUE(ull::ledger_balanced(r.ledger, r.proof->conclusion)) << e.path();
    ++n;
  }
  EXPECT_GE(n, 10u);
}

TEST(Golden, InvalidProofsFailWhereAnnotated) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(fs::path(ULL_DATA_DIR) / "proofs" / "invalid")) {
    const auto r = ull::check(ull::load_proof(e.path().string()));
    ASSERT_FALSE(r.valid) << e.path();
    EXPECT_EQ(r.failure->path, expectation(e.path(), "expect-path")) << e.path();
    EXPECT_EQ(r.failure->rule, expectation(e.path(), "expect-rule")) << e.path();
    ++n;
  }
  EXPECT_GE(n, 6u);
}

}  // namespace
