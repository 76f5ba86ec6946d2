// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "ncproof/rank.hpp"
#include "oracle.hpp"

using namespace ncproof;
using namespace ncproof::rank;
using testutil::cp;
using testutil::nc;
using testutil::x;

namespace {

std::vector<std::vector<mpq_class>> to_mpq(const std::vector<std::vector<Scalar>>& m) { return m; }

// Reference ranks from the full dense prefix/suffix matrices.
std::vector<std::size_t> reference_ranks(const NCPoly& f) {
  std::vector<std::size_t> out;
  const auto d = static_cast<std::size_t>(f.degree());
  for (std::size_t k = 0; k <= d; ++k) {
    std::map<Word, std::size_t> rows;
    std::map<Word, std::size_t> cols;
    for (const auto& [w, c] : f.terms()) {
      rows.emplace(Word(w.begin(), w.begin() + static_cast<long>(k)), 0);
      cols.emplace(Word(w.begin() + static_cast<long>(k), w.end()), 0);
    }
    std::size_t i = 0;
    for (auto& [w, idx] : rows) idx = i++;
    i = 0;
    for (auto& [w, idx] : cols) idx = i++;
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size()));
    for (const auto& [w, c] : f.terms()) {
      m[rows[Word(w.begin(), w.begin() + static_cast<long>(k))]][cols[Word(w.begin() + static_cast<long>(k), w.end())]] = c;
    }
    out.push_back(oracle::dense_rank(m));
  }
  return out;
}

}  // namespace

TEST(Nisan, SingleWord) {
  NisanMatrix m = nisan_matrix(nc("(* x1 x2)"), 1);
  ASSERT_EQ(m.rows.size(), 1U);
  EXPECT_EQ(m.entry(0, 0), 1);
  RankReport r = nisan_bound(nc("(* x3 (* x1 (* x2 x2)))"));
  EXPECT_EQ(r.per_k, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(r.total, 5U);
}

TEST(Nisan, HardTwoMiddleMatrix) {
  NCPoly f = hard_nc_poly(2, Order::identity(4));
  NisanMatrix m = nisan_matrix(f, 1);
  EXPECT_EQ(m.rows, (std::vector<Word>{{x(1)}, {x(2)}, {x(3)}}));
  EXPECT_EQ(rank_of(m, Field::rationals()), 3U);
  EXPECT_EQ(nisan_matrix(f, 0).rows.size(), 1U);
  EXPECT_EQ(rank_of(nisan_matrix(f, 0), Field::rationals()), 1U);
}

TEST(Nisan, HardRankProfiles) {
  Order o = Order::identity(6);
  EXPECT_EQ(nisan_bound(hard_nc_poly(1, o)).per_k, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(nisan_bound(hard_nc_poly(2, o)).per_k, (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_EQ(nisan_bound(hard_nc_poly(2, o)).total, 5U);
  NCPoly h3 = hard_nc_poly(3, o);
  EXPECT_EQ(nisan_bound(h3).per_k, reference_ranks(h3));
  EXPECT_EQ(nisan_bound(h3).total, 10U);
}

TEST(Nisan, RanksMatchTheDenseReference) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    NCPoly f(Field::rationals());
    const std::size_t d = 1 + trial % 4;
    for (int t = 0; t < 6; ++t) {
      Word w;
      for (std::size_t i = 0; i < d; ++i) w.push_back(x(1 + static_cast<std::uint32_t>(rng() % 3)));
      f.add_term(w, Scalar(static_cast<long>(rng() % 7) - 3));
    }
    if (f.is_zero()) continue;
    EXPECT_EQ(nisan_bound(f).per_k, reference_ranks(f));
    NCPoly g(Field::prime(3));
    for (const auto& [w, c] : f.terms()) g.add_term(w, c);
    if (g.is_zero()) continue;
    RankReport modular = nisan_bound(g);
    for (std::size_t k = 0; k < modular.per_k.size(); ++k) EXPECT_LE(modular.per_k[k], nisan_bound(f).per_k[k]);
  }
}

TEST(Nisan, EntriesAreCoefficients) {
  NCPoly f = hard_nc_poly(4, Order::identity(8));
  gen::Rng rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t k = trial % 5;
    NisanMatrix m = nisan_matrix(f, k);
    std::size_t r = rng() % m.rows.size();
    std::size_t c = rng() % m.cols.size();
    Word w = m.rows[r];
    w.insert(w.end(), m.cols[c].begin(), m.cols[c].end());
    EXPECT_EQ(m.entry(r, c), f.coefficient(w));
  }
}

TEST(Nisan, RejectsBadInput) {
  EXPECT_THROW(nisan_matrix(nc("(+ x1 (* x1 x2))"), 1), InvalidArgument);
  EXPECT_THROW(nisan_matrix(NCPoly(Field::rationals()), 0), InvalidArgument);
  EXPECT_THROW(nisan_matrix(nc("(* x1 x2)"), 3), InvalidArgument);
  EXPECT_THROW(hard_poly(3, Order::identity(5)), InvalidArgument);
}

TEST(Hard, PolynomialShape) {
  Order o = Order::identity(6);
  EXPECT_EQ(hard_poly(1, o), cp("(+ x1 x2)"));
  EXPECT_EQ(hard_nc_poly(2, o), nc("(+ (* x1 x2) (+ (* x1 x4) (+ (* x2 x3) (* x3 x4))))"));
  EXPECT_EQ(hard_poly(3, o).size(), 8U);
  Order rev = Order::parse("4 3 2 1", 4);
  // y1 = x4, y2 = x3, z1 = x2, z2 = x1.
  EXPECT_EQ(hard_poly(2, rev), cp("(* (+ x4 x2) (+ x3 x1))"));
}

TEST(Hard, PermutationSubmatrices) {
  Order o = Order::identity(20);
  NisanMatrix a = permutation_submatrix(2, 1, o);
  auto dense = a.dense();
  EXPECT_EQ(dense, (std::vector<std::vector<Scalar>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(permutation_submatrix(3, 0, o).dense(), (std::vector<std::vector<Scalar>>{{1}}));
  NisanMatrix b = permutation_submatrix(3, 2, o);
  EXPECT_TRUE(is_permutation_matrix(b));
  EXPECT_EQ(oracle::dense_rank(to_mpq(b.dense())), 3U);
  for (std::size_t d = 1; d <= 6; ++d) {
    RankReport full = nisan_bound(hard_nc_poly(d, o));
    for (std::size_t k = 0; k <= d; ++k) {
      NisanMatrix s = permutation_submatrix(d, k, o);
      EXPECT_TRUE(is_permutation_matrix(s));
      std::size_t r = rank_of(s, Field::rationals());
      EXPECT_EQ(r, oracle::binomial(static_cast<unsigned>(d), static_cast<unsigned>(k)));
      EXPECT_LE(r, full.per_k[k]);
    }
  }
}
