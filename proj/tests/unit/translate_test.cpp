// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "ncproof/check.hpp"
#include "ncproof/translate.hpp"
#include "oracle.hpp"

using namespace ncproof;
using namespace ncproof::translate;
using testutil::F;
using testutil::x;

namespace {

bool accepted(const Proof& p, bool refutation = false) {
  CheckOptions o;
  o.refutation = refutation;
  return check(p, o).accepted;
}

bool computes(const Formula& f, const Formula& target) {
  return oracle::expand_words(f) == oracle::expand_words(target);
}

}  // namespace

TEST(Commutator, TwoVariablesUseTheAxiom) {
  Proof p = commutator_proof(F("x1"), F("x2"));
  ASSERT_EQ(p.lines.size(), 1U);
  EXPECT_TRUE(std::holds_alternative<just::Comm>(p.lines[0].justification));
  EXPECT_TRUE(accepted(p));
}

TEST(Commutator, SumOnTheLeft) {
  Formula f = F("(+ x1 x2)");
  Formula g = F("x3");
  Proof p = commutator_proof(f, g);
  EXPECT_TRUE(accepted(p));
  EXPECT_TRUE(computes(p.lines.back().formula, Formula::difference(Formula::times(f, g), Formula::times(g, f))));
  std::size_t comms = 0;
  for (const auto& l : p.lines) comms += std::holds_alternative<just::Comm>(l.justification) ? 1 : 0;
  EXPECT_EQ(comms, 2U);
}

TEST(Commutator, ProductOnTheLeft) {
  Formula f = F("(* x1 x2)");
  Formula g = F("x3");
  Proof p = commutator_proof(f, g);
  EXPECT_TRUE(accepted(p));
  EXPECT_TRUE(computes(p.lines.back().formula, Formula::difference(Formula::times(f, g), Formula::times(g, f))));
}

TEST(Commutator, RejectsConstantOperands) {
  EXPECT_THROW(commutator_proof(F("3"), F("x1")), InvalidArgument);
  EXPECT_THROW(commutator_proof(F("x1"), F("(+ x2 (* -1 x2))")), InvalidArgument);
}

TEST(Commutator, RandomPairsVerify) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Formula f = gen::nonconstant_formula(rng, 11, 4);
    Formula g = gen::nonconstant_formula(rng, 11, 4);
    Proof p = commutator_proof(f, g);
    ASSERT_TRUE(accepted(p)) << to_string(f) << " " << to_string(g);
    EXPECT_TRUE(computes(p.lines.back().formula, Formula::difference(Formula::times(f, g), Formula::times(g, f))));
  }
}

TEST(SubstituteInContext, TrivialContexts) {
  Formula h = F("(* x1 x2)");
  Formula h2 = F("(* x2 x1)");
  Proof same = substitute_in_context(F("x9"), x(9), h, h2);
  EXPECT_EQ(same.lines.size(), 1U);
  EXPECT_TRUE(accepted(same));
  Proof plus = substitute_in_context(F("(+ x9 x2)"), x(9), h, h2);
  EXPECT_TRUE(accepted(plus));
  EXPECT_TRUE(computes(plus.lines.back().formula, Formula::difference(h, h2)));
}

TEST(SubstituteInContext, ProductContexts) {
  Formula h = F("(* x1 x2)");
  Formula h2 = F("(* x2 x1)");
  for (const char* a : {"(* x3 x9)", "(* x9 (+ x1 2))", "(* (+ x3 (* x9 x1)) (* x2 x3))"}) {
    Formula ctx = F(a);
    Proof p = substitute_in_context(ctx, x(9), h, h2);
    EXPECT_TRUE(accepted(p)) << a;
    Formula target = Formula::difference(substitute(ctx, x(9), h), substitute(ctx, x(9), h2));
    EXPECT_TRUE(computes(p.lines.back().formula, target)) << a;
  }
  EXPECT_THROW(substitute_in_context(F("(* x3 x3)"), x(9), h, h2), InvalidArgument);
  EXPECT_THROW(substitute_in_context(F("(* x9 x9)"), x(9), h, h2), InvalidArgument);
}

TEST(PcrToOfpc, ComplementFixture) {
  translate::Report r = translate::pcr_to_ofpc(fixtures::proof("pcr_complement.proof"));
  EXPECT_TRUE(accepted(r.output, true));
  EXPECT_EQ(r.output.system, ProofSystem::OFPC);
  EXPECT_TRUE(r.within_bound());
}

TEST(PcrToOfpc, ComplementMultiplicationBecomesTheGadget) {
  translate::Report r = translate::pcr_to_ofpc(fixtures::proof("pcr_fphp_2_1.proof"));
  EXPECT_TRUE(accepted(r.output, true));
  // Line 2 of the input multiplies line 1 (1 - x2) by the complement of x1.
  const auto& lines = r.output.lines;
  bool found = false;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const auto* mul = std::get_if<just::Mul>(&lines[i].justification);
    const auto* add = std::get_if<just::Add>(&lines[i + 1].justification);
    if (mul && add && mul->r == x(1) && add->j == mul->j && add->k == i + 1 && add->a == 1 && add->b == -1) {
      EXPECT_TRUE(computes(lines[i].formula, F("(* x1 (+ 1 (* -1 x2)))")));
      EXPECT_TRUE(computes(lines[i + 1].formula, F("(* (+ 1 (* -1 x1)) (+ 1 (* -1 x2)))")));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(PcrToOfpc, PlainPcProofsKeepTheirMonomials) {
  Proof pc = fixtures::proof("pc_fphp_2_1.proof");
  pc.system = ProofSystem::PCR;
  translate::Report r = translate::pcr_to_ofpc(pc);
  EXPECT_TRUE(accepted(r.output, true));
  EXPECT_EQ(r.output.lines.size(), pc.lines.size());
  for (std::size_t i = 0; i < pc.lines.size(); ++i) {
    EXPECT_EQ(oracle::expand_commutative(r.output.lines[i].formula), oracle::expand_commutative(pc.lines[i].formula));
  }
}

TEST(PcrToOfpc, RejectsInvalidInput) {
  Proof bad = fixtures::proof("pcr_complement.proof");
  bad.lines[3].formula = F("(+ X1 (* 2 x1))");
  EXPECT_THROW(translate::pcr_to_ofpc(bad), InvalidArgument);
}

TEST(FpcToNfpc, ProofsWithoutRewritesMapLineForLine) {
  Proof p = fixtures::proof("pc_trivial.proof");
  p.system = ProofSystem::FPC;
  p.lines[2].formula = F("(+ (* 1 x1) (* 1 (+ 1 (* -1 x1))))");
  ASSERT_TRUE(accepted(p));
  translate::Report r = translate::fpc_to_nfpc(p);
  EXPECT_TRUE(accepted(r.output));
  EXPECT_EQ(r.output.lines.size(), 3U);
}

TEST(FpcToNfpc, EveryRuleTranslates) {
  Proof fpc = fixtures::proof("fpc_all_rules.proof");
  translate::Report r = translate::fpc_to_nfpc(fpc);
  EXPECT_TRUE(accepted(r.output, true));
  ASSERT_EQ(r.lines_per_line.size(), fpc.lines.size());
  for (std::size_t i = 0; i < fpc.lines.size(); ++i) {
    const auto* rw = std::get_if<just::Rewrite>(&fpc.lines[i].justification);
    if (!rw || rw->rule != RewriteRule::CommTimes) {
      EXPECT_EQ(r.lines_per_line[i], 1U) << "line " << i + 1;
    }
  }
}

TEST(FpcToNfpc, CommutationInsideAContext) {
  translate::Report r = translate::fpc_to_nfpc(fixtures::proof("fpc_assoc.proof"));
  EXPECT_TRUE(accepted(r.output));
  EXPECT_TRUE(computes(r.output.lines.back().formula, F("(* (* x3 x2) x1)")));
  EXPECT_GT(r.lines_per_line[2], 1U);
}
