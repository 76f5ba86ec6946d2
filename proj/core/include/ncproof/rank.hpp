// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ncproof/poly.hpp"

namespace ncproof::rank {

/// Sparse row: (column, value) pairs with increasing columns and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Prefix/suffix coefficient matrix of a homogeneous polynomial, restricted
/// to the prefixes and suffixes that occur in its support. Every omitted
/// row or column of the full n^k × n^(d-k) matrix is zero.
struct NisanMatrix {
  std::size_t k = 0;
  std::vector<Word> rows;
  std::vector<Word> cols;
  std::vector<SparseRow> entries;

  Scalar entry(std::size_t row, std::size_t col) const;
  /// Dense copy, mostly for printing and tests.
  std::vector<std::vector<Scalar>> dense() const;
};

struct RankReport {
  std::size_t d = 0;
  std::vector<std::size_t> per_k;
  std::size_t total = 0;
};

/// Throws InvalidArgument for zero or inhomogeneous input and for k > d.
NisanMatrix nisan_matrix(const NCPoly& f, std::size_t k);

/// Exact rank of sparse rows: fraction-free integer elimination over the
/// rationals, modular elimination over GF(p).
std::size_t rank_of(const std::vector<SparseRow>& rows, const Field& field);
std::size_t rank_of(const NisanMatrix& m, const Field& field);

/// Ranks of all k = 0..d matrices over the field of f.
RankReport nisan_bound(const NCPoly& f);

/// Π_{i=1..d} (y_i + z_i) with y_i the variable at position i of the order
/// and z_i the one at position d + i. Throws InvalidArgument when the order
/// covers fewer than 2d variables.
CPoly hard_poly(std::size_t d, const Order& order, const Field& field = Field::rationals());

/// ⟦hard_poly(d)⟧.
NCPoly hard_nc_poly(std::size_t d, const Order& order, const Field& field = Field::rationals());

/// The C(d,k) × C(d,k) submatrix of the k-th matrix of ⟦HARD_d⟧ whose rows
/// are the k-subsets of y variables and whose columns are the (d-k)-subsets
/// of z variables, both in lexicographic order of index sets.
NisanMatrix permutation_submatrix(std::size_t d, std::size_t k, const Order& order,
                                  const Field& field = Field::rationals());

/// True iff every row and every column holds exactly one entry, equal to 1.
bool is_permutation_matrix(const NisanMatrix& m);

}  // namespace ncproof::rank
