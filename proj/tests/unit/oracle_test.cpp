// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "mutate.hpp"
#include "ncproof/check.hpp"
#include "oracle.hpp"

using testutil::F;

TEST(Oracle, ExpandsWordsAndMonomials) {
  auto e = oracle::expand_words(F("(* (+ x1 x2) x1)"));
  EXPECT_EQ(e.size(), 2U);
  EXPECT_EQ((e[{2, 1}]), 1);
  auto c = oracle::expand_commutative(F("(+ (* x1 x2) (* -1 (* x2 x1)))"));
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(oracle::expand_words(F("(* 3 x1)"), 3).empty());
}

TEST(Oracle, DenseRankAndBinomials) {
  std::vector<std::vector<mpq_class>> m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(oracle::dense_rank(m), 2U);
  EXPECT_EQ(oracle::binomial(10, 5), 252U);
}

TEST(Oracle, SweepDetectsUnsoundLines) {
  ncproof::Proof p = fixtures::proof("pc_trivial.proof");
  EXPECT_TRUE(oracle::boolean_sweep(p).inputs_unsatisfiable);
  p.inputs.pop_back();
  p.lines.erase(p.lines.begin() + 1, p.lines.end());
  p.lines[0].formula = F("(+ x1 1)");
  auto s = oracle::boolean_sweep(p);
  EXPECT_FALSE(s.inputs_unsatisfiable);
  EXPECT_FALSE(s.lines_vanish);
}

TEST(Oracle, MutantsAreRejectedAtTheirLine) {
  for (const auto& name : fixtures::all_proofs()) {
    ncproof::Proof p = fixtures::proof(name);
    for (const auto& m : mutate::single_point_mutants(p)) {
      auto report = ncproof::check(m.proof);
      EXPECT_EQ(report.first_failure_line(), m.line) << name << " line " << m.line << ": " << m.what;
    }
  }
}
