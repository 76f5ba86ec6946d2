// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "ncproof/check.hpp"
#include "ncproof/ordered.hpp"

using namespace ncproof;
using testutil::F;

namespace {

Proof make(ProofSystem system, std::uint32_t nvars, std::vector<std::string> inputs,
           std::vector<std::pair<std::string, std::string>> lines, const Order& order = {}) {
  Proof p;
  p.system = system;
  p.nvars = nvars;
  p.order = order.size() == 0 ? Order::identity(nvars) : order;
  for (const auto& i : inputs) p.inputs.push_back(F(i));
  for (const auto& [f, j] : lines) p.lines.push_back(ProofLine{F(f), parse_justification(j)});
  return p;
}

CheckReport refute(const Proof& p) {
  CheckOptions o;
  o.refutation = true;
  return check(p, o);
}

}  // namespace

TEST(Check, AcceptsEveryFixture) {
  for (const auto& name : fixtures::refutations()) {
    CheckReport r = refute(fixtures::proof(name));
    EXPECT_TRUE(r.accepted) << name << ": " << (r.failures.empty() ? "" : r.failures[0].reason);
    EXPECT_TRUE(r.refutes) << name;
  }
  EXPECT_TRUE(check(fixtures::proof("fpc_assoc.proof")).accepted);
}

TEST(Check, PolynomialCalculusRefutation) {
  Proof p = make(ProofSystem::PC, 1, {"x1", "(+ 1 (* -1 x1))"},
                 {{"x1", "input 1"}, {"(+ 1 (* -1 x1))", "input 2"}, {"1", "add 1 2 1 1"}});
  CheckReport r = refute(p);
  EXPECT_TRUE(r.accepted);
  ASSERT_TRUE(r.degree.has_value());
  EXPECT_EQ(*r.degree, 1);
  EXPECT_EQ(r.size, 4U);
}

TEST(Check, RefutationNeedsTheConstantOne) {
  Proof p = make(ProofSystem::PC, 1, {"x1", "(+ 1 (* -1 x1))"},
                 {{"x1", "input 1"}, {"(+ 1 (* -1 x1))", "input 2"}, {"2", "add 1 2 2 2"}});
  EXPECT_TRUE(check(p).accepted);
  CheckReport r = refute(p);
  EXPECT_FALSE(r.accepted);
  EXPECT_FALSE(r.refutes);
}

TEST(Check, CommutatorAxiomInNoncommutativeCalculus) {
  Proof good = make(ProofSystem::NFPC, 2, {}, {{"(+ (* x1 x2) (* -1 (* x2 x1)))", "comm 1 2"}});
  EXPECT_TRUE(check(good).accepted);
  Proof bad = make(ProofSystem::NFPC, 2, {}, {{"(+ (* x1 x2) (* x2 x1))", "comm 1 2"}});
  CheckReport r = check(bad);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.first_failure_line(), 1U);
}

TEST(Check, NoncommutativeLinesAreSemantic) {
  Proof p = make(ProofSystem::NFPC, 2, {"(* x1 x2)"},
                 {{"(* x1 x2)", "input 1"}, {"(* x1 (* x1 x2))", "mulL 1 1"}, {"(* (* x1 x2) x2)", "mulR 1 2"}});
  EXPECT_TRUE(check(p).accepted);
  // Any formula computing the same polynomial is acceptable.
  p.lines[1].formula = F("(* (* x1 x1) (+ x2 0))");
  EXPECT_TRUE(check(p).accepted);
  p.lines[2].justification = parse_justification("mulL 1 2");
  EXPECT_EQ(check(p).first_failure_line(), 3U);
}

TEST(Check, OrderedMultiplication) {
  Proof good = make(ProofSystem::OFPC, 3, {"x1"}, {{"x1", "input 1"}, {"(* x1 x3)", "mul 1 3"}});
  EXPECT_TRUE(check(good).accepted);
  Proof bad = make(ProofSystem::OFPC, 3, {"x1"}, {{"x1", "input 1"}, {"(* x3 x1)", "mul 1 3"}});
  CheckReport r = check(bad);
  EXPECT_FALSE(r.accepted);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures[0].line, 2U);
  EXPECT_EQ(r.failures[0].kind, FailureKind::NotOrdered);
}

TEST(Check, OrderedLinesMayUseAnyOrderedFormula) {
  Proof p = make(ProofSystem::OFPC, 3, {"(+ x1 x2)"},
                 {{"(+ x1 x2)", "input 1"}, {"(+ (* x1 x3) (* (+ x2 (* 0 x3)) x3))", "mul 1 3"}});
  EXPECT_TRUE(check(p).accepted);
}

TEST(Check, OrderedInputsMustBeOrdered) {
  Proof p = make(ProofSystem::OFPC, 2, {"(* x2 x1)"}, {{"(* x1 x2)", "input 1"}});
  CheckReport r = check(p);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.first_failure_line(), 0U);
}

TEST(Check, SyntacticSystemFollowsTreesExactly) {
  Proof p = make(ProofSystem::FPC, 3, {"(* (* x1 x2) x3)"},
                 {{"(* (* x1 x2) x3)", "input 1"}, {"(* x1 (* x2 x3))", "rw 1 assoc* . bwd"}});
  EXPECT_TRUE(check(p).accepted);
  p.lines[1].justification = parse_justification("rw 1 assoc* . fwd");
  EXPECT_FALSE(check(p).accepted);

  Proof add = make(ProofSystem::FPC, 1, {"x1"},
                   {{"x1", "input 1"}, {"(+ (* 1 x1) (* 1 x1))", "add 1 1 1 1"}, {"(* 2 x1)", "add 1 1 1 1"}});
  CheckReport r = check(add);
  EXPECT_EQ(r.first_failure_line(), 3U);
  EXPECT_EQ(r.failures.size(), 1U);

  Proof mul = make(ProofSystem::FPC, 2, {"x1"}, {{"x1", "input 1"}, {"(* x1 x2)", "mul 1 2"}});
  EXPECT_EQ(check(mul).first_failure_line(), 2U);
  mul.lines[1].formula = F("(* x2 x1)");
  EXPECT_TRUE(check(mul).accepted);
}

TEST(Check, ScalarRuleEvaluatesVariableFreeSubtrees) {
  Proof p = make(ProofSystem::FPC, 1, {"(* (+ 1 1) x1)"},
                 {{"(* (+ 1 1) x1)", "input 1"}, {"(* 2 x1)", "rw 1 scalar L fwd"}, {"(* (+ 1 1) x1)", "rw 2 scalar L bwd"}});
  EXPECT_TRUE(check(p).accepted);
  p.lines[1].formula = F("(* 3 x1)");
  EXPECT_EQ(check(p).first_failure_line(), 2U);
}

TEST(Check, ComplementVariablesOnlyInPcr) {
  Proof pc = make(ProofSystem::PC, 1, {}, {{"(* x1 X1)", "barbool 1"}});
  CheckReport r = check(pc);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.failures[0].kind, FailureKind::Malformed);
  Proof pcr = pc;
  pcr.system = ProofSystem::PCR;
  EXPECT_TRUE(check(pcr).accepted);
}

TEST(Check, PcProofsAreAlsoPcrProofs) {
  for (const auto& name : {"pc_trivial.proof", "pc_fphp_2_1.proof", "pc_fphp_2_1_gf3.proof"}) {
    Proof p = fixtures::proof(name);
    p.system = ProofSystem::PCR;
    EXPECT_TRUE(refute(p).accepted) << name;
  }
}

TEST(Check, MalformedReferencesArePinnedToTheirLine) {
  Proof p = make(ProofSystem::PC, 2, {"x1"},
                 {{"x1", "input 1"}, {"x1", "input 3"}, {"(* x1 x3)", "mul 1 3"}, {"x1", "add 1 4 1 0"},
                  {"(* x1 x2)", "comm 1 2"}});
  CheckReport r = check(p);
  ASSERT_EQ(r.failures.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.failures[i].line, i + 2);
    EXPECT_EQ(r.failures[i].kind, FailureKind::Malformed);
  }
}

TEST(Check, CapOverflowRejectsWithItsOwnReason) {
  std::string big = "(* (+ x1 x2) (* (+ x3 x4) (* (+ x5 x6) (+ x7 x8))))";
  Proof p = make(ProofSystem::NFPC, 8, {big}, {{big, "input 1"}});
  CheckOptions o;
  o.pit.cap = 4;
  CheckReport r = check(p, o);
  EXPECT_FALSE(r.accepted);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures[0].kind, FailureKind::CapExceeded);
  EXPECT_EQ(to_string(FailureKind::CapExceeded), "cap-exceeded");
}

TEST(Check, MatrixBackendAgreesOnFixtures) {
  CheckOptions o;
  o.refutation = true;
  o.pit.backend = pit::Backend::RandomMatrix;
  for (const auto& name : {"nfpc_basic.proof", "ofpc_fphp_2_1.proof", "ofpc_reversed.proof"}) {
    EXPECT_TRUE(check(fixtures::proof(name), o).accepted) << name;
  }
}
