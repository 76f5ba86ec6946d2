// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncproof/formula.hpp"

namespace ncproof {

enum class ProofSystem { PC, PCR, FPC, NFPC, OFPC };

std::string_view to_string(ProofSystem system);
/// Throws InvalidArgument for unknown names.
ProofSystem parse_system(std::string_view name);

enum class RewriteRule { Zero, Unit, Scalar, CommPlus, CommTimes, AssocPlus, AssocTimes, Dist };
enum class Direction { Forward, Backward };

std::string_view to_string(RewriteRule rule);
/// Accepts `comm+`, `comm*` and `comm×` style names.
RewriteRule parse_rule(std::string_view name);
inline constexpr RewriteRule kAllRewriteRules[] = {RewriteRule::Zero,      RewriteRule::Unit,
                                                   RewriteRule::Scalar,    RewriteRule::CommPlus,
                                                   RewriteRule::CommTimes, RewriteRule::AssocPlus,
                                                   RewriteRule::AssocTimes, RewriteRule::Dist};

/// Line justifications. Line and input references are 1-based.
namespace just {
struct Input {
  std::size_t input;
};
struct Bool {
  std::uint32_t var;
};
struct Comm {
  std::uint32_t i;
  std::uint32_t j;
};
struct BarBool {
  std::uint32_t var;
};
struct Compl {
  std::uint32_t var;
};
struct Add {
  std::size_t j;
  std::size_t k;
  Scalar a;
  Scalar b;
};
struct Mul {
  std::size_t j;
  VarId r;
};
struct MulL {
  std::size_t j;
  VarId r;
};
struct MulR {
  std::size_t j;
  VarId r;
};
struct Rewrite {
  std::size_t j;
  RewriteRule rule;
  /// Over {L, R}; empty addresses the root.
  std::string path;
  Direction direction;
};
struct Copy {
  std::size_t j;
};
}  // namespace just

using Justification = std::variant<just::Input, just::Bool, just::Comm, just::BarBool, just::Compl, just::Add,
                                   just::Mul, just::MulL, just::MulR, just::Rewrite, just::Copy>;

/// Earlier lines the justification refers to.
std::vector<std::size_t> premises(const Justification& j);
std::string to_string(const Justification& j);
/// Parses the text after ';' on a proof line.
Justification parse_justification(std::string_view text);
/// Whether the system admits this kind of justification at all.
bool allowed_in(const Justification& j, ProofSystem system);

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Proof {
  ProofSystem system = ProofSystem::PC;
  Field field;
  std::uint32_t nvars = 0;
  Order order;
  std::vector<Formula> inputs;
  std::vector<ProofLine> lines;

  /// Sum of formula sizes over all lines.
  std::size_t formula_size() const;
};

/// x_i·(1 + (-1)·x_i)
Formula bool_axiom(std::uint32_t i);
/// x_i·x_j + (-1)·(x_j·x_i)
Formula comm_axiom(std::uint32_t i, std::uint32_t j);
/// x_i·X_i
Formula barbool_axiom(std::uint32_t i);
/// (x_i + X_i) + (-1)
Formula compl_axiom(std::uint32_t i);
/// a·f + b·g, with both scalars written out.
Formula linear_combination(const Scalar& a, const Formula& f, const Scalar& b, const Formula& g);

/// Parses the line-oriented proof format. Throws ParseError.
Proof parse_proof(std::string_view text);
std::string to_string(const Proof& proof);

/// Whether `to` is obtained from `from` by one application of `rule` at the
/// root, read left-to-right for Forward and right-to-left for Backward.
bool rewrite_matches(RewriteRule rule, Direction direction, const Formula& from, const Formula& to,
                     const Field& field);
/// The rewritten subformula when the rule determines it; empty when the rule
/// does not apply or the result has a free choice (Zero and Scalar backward).
std::optional<Formula> rewrite_result(RewriteRule rule, Direction direction, const Formula& from,
                                      const Field& field);

}  // namespace ncproof
