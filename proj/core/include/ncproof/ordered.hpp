// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "ncproof/formula.hpp"
#include "ncproof/pit.hpp"

namespace ncproof::ordered {

/// Every word of p is ≼-nondecreasing.
bool is_ordered_poly(const NCPoly& p, const Order& order);

/// At every product gate the largest variable on the left is ≼ the smallest
/// variable on the right. Gates with a variable-free side always pass.
bool is_syntactic_ordered(const Formula& f, const Order& order);

/// Evidence that a formula is not ordered: the product gate at `path`
/// multiplies a left polynomial containing `left_word` (which contains
/// `high`) by a right polynomial containing `right_word` (which contains
/// `low`), with low ≺ high. Both words are longest among those containing
/// the respective variable, so left_word·right_word occurs in the product
/// with a nonzero coefficient and is not ≼-nondecreasing.
struct Witness {
  std::string path;
  VarId high;
  VarId low;
  Word left_word;
  Word right_word;

  Word product_word() const;
  std::string describe() const;
};

struct Verdict {
  /// Set when the input is ordered: a syntactic ordered formula of the same
  /// size computing the same polynomial.
  std::optional<Formula> canonical;
  std::optional<Witness> witness;

  bool is_ordered() const noexcept { return canonical.has_value(); }
};

/// Repeatedly finds a violating product gate and zeroes the offending
/// variable on whichever side it does not genuinely occur in. Stops with a
/// syntactic ordered formula or with a witness once both variables occur.
/// Throws CapExceeded if an identity test exceeds the cap.
Verdict recognize(const Formula& f, const Order& order, const Field& field = Field::rationals(),
                  const pit::Options& options = {});

/// Syntactic ordered formula computing ⟦x_r · f⟧ where `f` is syntactic
/// ordered and computes ⟦f⟧. Throws InvalidArgument when `f` is not
/// syntactic ordered.
Formula multiply_by_var(const Formula& f, VarId r, const Order& order);

/// Sum over monomials of coefficient times the right-comb ≼-sorted product.
/// Const 0 for the zero polynomial.
Formula ordered_sum_of_monomials(const CPoly& p, const Order& order);

/// Right-comb product of the given formulas, left to right; Const 1 if empty.
Formula product_of(const std::vector<Formula>& factors);

}  // namespace ncproof::ordered
