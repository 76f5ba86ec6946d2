// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncproof/formula.hpp"
#include "ncproof/proof.hpp"

namespace ncproof::instances {

/// A generated family member: the polynomials, a formula for each of them
/// (ordered under the default order) and human-readable notes.
struct Instance {
  Field field;
  std::uint32_t nvars = 0;
  std::vector<CPoly> axioms;
  std::vector<Formula> formulas;
  /// Variable naming and other header comments.
  std::vector<std::string> notes;
  /// Non-fatal issues such as a satisfiable charge vector.
  std::vector<std::string> warnings;

  /// Header plus one `input j:` line per axiom and no proof lines.
  Proof axiom_file(ProofSystem system = ProofSystem::PC) const;
};

/// Index of x_{i,k} for pigeon i and hole k (both 1-based) with n holes.
constexpr std::uint32_t pigeon_var(std::uint32_t i, std::uint32_t k, std::uint32_t n) { return (i - 1) * n + k; }

/// Pigeon, functional and hole polynomials, in that order. Throws
/// InvalidArgument unless m > n ≥ 1.
Instance gen_fphp(std::uint32_t m, std::uint32_t n, const Field& field = Field::rationals());
/// As gen_fphp with linear pigeon polynomials 1 - (x_{i,1} + ... + x_{i,n}).
Instance gen_fphp_lowdeg(std::uint32_t m, std::uint32_t n, const Field& field = Field::rationals());

/// Undirected multigraph on vertices 1..vertices.
struct Graph {
  std::uint32_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  /// One `u v` pair per line; '#' starts a comment. Throws ParseError.
  static Graph parse(std::string_view text);
  /// Connected components as vertex lists, smallest vertex first.
  std::vector<std::vector<std::uint32_t>> components() const;
};

/// Tseitin constraints mod p, one per vertex, with `charge[v-1]` the charge
/// of vertex v. For p = 2 edge e is the variable x_e; the constraint is
/// Σ x_e + c over GF(2) and Π(1 - 2x_e) - (-1)^c otherwise. For p > 2 edge
/// e carries p - 1 indicator variables with at-most-one constraints, and
/// edges are oriented from their first to their second endpoint.
/// Adds a warning when the charges make the instance satisfiable.
Instance gen_tseitin(const Graph& graph, std::uint64_t p, const std::vector<std::int64_t>& charge,
                     const Field& field = Field::rationals());

/// Q_j(f_1, ..., f_n) with f_i = x_i + x_{n+i} + ... + x_{(width-1)n+i}.
Instance gen_subst_instance(const std::vector<CPoly>& q, std::uint32_t nvars, std::uint32_t width = 2);

/// Exhaustive search for a common 0/1 root; nvars must be at most 24.
bool has_boolean_root(const std::vector<CPoly>& axioms, std::uint32_t nvars);

}  // namespace ncproof::instances
