// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncproof/pit.hpp"
#include "ncproof/proof.hpp"

namespace ncproof {

enum class FailureKind {
  /// The line does not follow from its justification.
  Invalid,
  /// Bad premise index, variable index or justification for the system.
  Malformed,
  /// An identity test needed more terms than the expansion cap allows.
  CapExceeded,
  /// OFPC line (or input) that is not an ordered formula.
  NotOrdered,
};

std::string_view to_string(FailureKind kind);

struct CheckFailure {
  /// 1-based proof line; 0 refers to the header or the inputs.
  std::size_t line = 0;
  FailureKind kind = FailureKind::Invalid;
  std::string reason;
};

struct CheckOptions {
  /// Also require the last line to compute 1.
  bool refutation = false;
  pit::Options pit;
};

struct CheckReport {
  /// No failures (including the refutation requirement when requested).
  bool accepted = false;
  /// The last line computes the constant 1; for FPC it must be the constant 1.
  bool refutes = false;
  std::vector<CheckFailure> failures;
  /// PC/PCR: total monomials over all lines. Other systems: total formula size.
  std::size_t size = 0;
  /// PC/PCR only: largest line degree.
  std::optional<long> degree;

  /// Smallest line with a failure, if any.
  std::optional<std::size_t> first_failure_line() const;
};

CheckReport check(const Proof& proof, const CheckOptions& options = {});

}  // namespace ncproof
