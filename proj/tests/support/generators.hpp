// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "ncproof/formula.hpp"
#include "ncproof/poly.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Random formula with exactly `nodes` nodes (rounded down to odd) over
/// x_1..x_nvars. Constants are small integers, sometimes zero.
ncproof::Formula formula(Rng& rng, std::size_t nodes, std::uint32_t nvars);

/// Random formula whose polynomial is not constant, retried as needed.
ncproof::Formula nonconstant_formula(Rng& rng, std::size_t max_nodes, std::uint32_t nvars);

/// Random syntactic ordered formula using only variables whose positions
/// lie in [lo, hi].
ncproof::Formula ordered_formula(Rng& rng, std::size_t nodes, const ncproof::Order& order, std::uint32_t lo,
                                 std::uint32_t hi);

/// Ordered formula computing a nonzero polynomial in which some variable
/// from positions [lo, hi] genuinely occurs.
ncproof::Formula ordered_nonconstant(Rng& rng, std::size_t nodes, const ncproof::Order& order, std::uint32_t lo,
                                     std::uint32_t hi);

/// Formula computing a non-ordered polynomial: a product of a part over
/// high positions and a part over low positions, placed in a random
/// ordered context that cannot cancel it.
ncproof::Formula order_violation(Rng& rng, std::size_t nodes, const ncproof::Order& order);

/// Random rewrite that keeps the noncommutative polynomial: associativity,
/// distributivity, sum commutation, unit and zero padding.
ncproof::Formula equivalent_variant(Rng& rng, const ncproof::Formula& f, int steps);

/// Random commutative polynomial, up to `terms` terms of degree ≤ max_degree.
ncproof::CPoly cpoly(Rng& rng, const ncproof::Field& field, std::uint32_t nvars, std::size_t terms,
                     std::size_t max_degree);

/// Random permutation order on n variables.
ncproof::Order random_order(Rng& rng, std::uint32_t n);

}  // namespace gen
