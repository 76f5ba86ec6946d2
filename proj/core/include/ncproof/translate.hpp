// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncproof/check.hpp"
#include "ncproof/proof.hpp"

namespace ncproof::translate {

/// Fixed constant of the PCR to OFPC size law: size_out ≤ C·n·size_in.
inline constexpr std::size_t kPcrSizeConstant = 40;

struct Report {
  Proof output;
  /// PCR: monomial count. Other inputs: total formula size.
  std::size_t size_in = 0;
  /// Total formula size of the output.
  std::size_t size_out = 0;
  /// For every input line, the output lines it produced and their total size.
  std::vector<std::size_t> lines_per_line;
  std::vector<std::size_t> size_per_line;
  /// C·n·size_in for translations that promise a linear bound.
  std::optional<std::size_t> size_bound;

  bool within_bound() const { return !size_bound || size_out <= *size_bound; }
};

/// Appends NFPC lines to a proof and builds the fragments used to simulate
/// commutativity: commutator proofs for f·g - g·f and substitution of a
/// proven difference inside a context.
class NfpcBuilder {
 public:
  /// `proof` must be an NFPC proof with at least one variable.
  explicit NfpcBuilder(Proof& proof);

  /// Appends a line and returns its 1-based index.
  std::size_t emit(Formula formula, Justification justification);
  const Formula& formula(std::size_t line) const { return proof_.lines.at(line - 1).formula; }
  std::size_t size() const noexcept { return proof_.lines.size(); }

  /// A line computing 0 (emitted once).
  std::size_t zero_line();
  /// `target`, which must compute 0, justified as a copy of the zero line.
  std::size_t zero_as(const Formula& target);
  /// `line` rewritten as `target`; no new line when the formula already matches.
  std::size_t copy_as(std::size_t line, const Formula& target);

  /// Line whose formula is f·g + (-1)·(g·f). Results are memoized per pair.
  std::size_t commutator(const Formula& f, const Formula& g);

  /// Given a line computing h - h2, where h is the subformula of `context`
  /// at `path`, derives a line computing context - context[h2 at path].
  /// The formula of the returned line is not normalized.
  std::size_t substitute(const Formula& context, std::string_view path, std::size_t given);

  /// From a line with formula Φ and a line computing h - h2 (h at `path` in
  /// Φ), derives a line with formula Φ[h2 at path].
  std::size_t replace_identity(std::size_t line, std::string_view path, const Formula& h2, std::size_t given);

  /// Line computing b·p where `line` computes p.
  std::size_t mult_left(const Formula& b, std::size_t line);
  /// Line computing p·c where `line` computes p.
  std::size_t mult_right(std::size_t line, const Formula& c);

 private:
  /// A line computing scale·(f·g - g·f); scale 0 means the commutator is
  /// zero and no line was needed.
  struct Scaled {
    std::size_t line = 0;
    Scalar scale;
  };

  Scalar constant_of(const Formula& f) const;
  Scaled commutator_scaled(const Formula& f, const Formula& g);
  std::size_t substitute_scaled(const Formula& context, std::string_view path, std::size_t given, Scalar& scale);
  std::size_t replace_scaled(std::size_t line, std::string_view path, const Formula& h2, const Scaled& given);

  Proof& proof_;
  std::optional<std::size_t> zero_;
  std::map<std::string, Scaled> commutators_;
};

/// NFPC proof (no inputs) ending in f·g - g·f. Throws InvalidArgument if
/// either operand computes a constant polynomial.
Proof commutator_proof(const Formula& f, const Formula& g, const Field& field = Field::rationals());

/// NFPC proof from the single input h - h2 ending in A[h/z] - A[h2/z].
/// Throws InvalidArgument unless z occurs exactly once in A.
Proof substitute_in_context(const Formula& a, VarId z, const Formula& h, const Formula& h2,
                            const Field& field = Field::rationals());

/// Replaces multiplications by barred variables with the three-line gadget,
/// applies x̄_i ↦ 1 - x_i to every line, drops lines that become 0 and
/// writes each line as an ordered sum of ordered products of x_i and
/// (1 - x_i) factors. Throws InvalidArgument if the input is not an
/// accepted PCR proof.
Report pcr_to_ofpc(const Proof& pcr, const CheckOptions& options = {});

/// Maps every F-PC line to one NFPC line, except commutativity-of-product
/// rewrites, which expand into a commutator proof followed by a
/// substitution into the rewritten line. Throws InvalidArgument if the input
/// is not an accepted F-PC proof.
Report fpc_to_nfpc(const Proof& fpc, const CheckOptions& options = {});

}  // namespace ncproof::translate
