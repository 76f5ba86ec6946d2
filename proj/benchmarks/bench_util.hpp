// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "ncproof/formula.hpp"

namespace bench {

// Random formula with about `nodes` nodes over x_1..x_nvars.
inline ncproof::Formula random_formula(std::mt19937_64& rng, std::size_t nodes, std::uint32_t nvars) {
  using ncproof::Formula;
  if (nodes <= 1) {
    std::uniform_int_distribution<std::uint32_t> var(1, nvars);
    return Formula::variable(ncproof::VarId::x(var(rng)));
  }
  std::uniform_int_distribution<std::size_t> split(0, (nodes - 1) / 2);
  std::size_t left = 2 * split(rng) + 1;
  if (left >= nodes) left = nodes - 2;
  Formula a = random_formula(rng, left, nvars);
  Formula b = random_formula(rng, nodes - 1 - left, nvars);
  return rng() % 2 ? Formula::plus(a, b) : Formula::times(a, b);
}

// (x_1 + ... + x_n)^k as a right-nested product of sums.
inline ncproof::Formula power_of_sum(std::uint32_t n, int k) {
  using ncproof::Formula;
  Formula sum = Formula::variable(ncproof::VarId::x(1));
  for (std::uint32_t i = 2; i <= n; ++i) sum = Formula::plus(sum, Formula::variable(ncproof::VarId::x(i)));
  Formula out = sum;
  for (int i = 1; i < k; ++i) out = Formula::times(sum, out);
  return out;
}

}  // namespace bench
