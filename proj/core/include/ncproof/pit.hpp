// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "ncproof/formula.hpp"

namespace ncproof::pit {

/// `Expand` decides identities exactly and is what every checker uses.
/// `RandomMatrix` evaluates at random square matrices; it can only err by
/// reporting a nonzero formula as zero and exists as an independent
/// cross-check.
enum class Backend { Expand, RandomMatrix };

Backend parse_backend(std::string_view name);

struct Options {
  Backend backend = Backend::Expand;
  std::size_t cap = kDefaultExpandCap;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Modulus used by the matrix backend over the rationals: 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61U) - 1;

/// Matrix dimension used for a formula of the given syntactic degree. A
/// nonzero noncommutative polynomial of degree < 2k is not an identity of
/// k×k matrices.
std::size_t matrix_dimension(std::size_t syntactic_degree);

/// True iff f computes the zero noncommutative polynomial.
bool is_zero(const Formula& f, const Field& field, const Options& options = {});

/// True iff f and g compute the same noncommutative polynomial.
bool equal(const Formula& f, const Formula& g, const Field& field, const Options& options = {});

}  // namespace ncproof::pit
