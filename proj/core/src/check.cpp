// SPDX-License-Identifier: Apache-2.0
#include "ncproof/check.hpp"

#include <algorithm>
#include <map>

#include "ncproof/ordered.hpp"

namespace ncproof {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::Invalid:
      return "invalid";
    case FailureKind::Malformed:
      return "malformed";
    case FailureKind::CapExceeded:
      return "cap-exceeded";
    case FailureKind::NotOrdered:
      return "not-ordered";
  }
  return "?";
}

std::optional<std::size_t> CheckReport::first_failure_line() const {
  std::optional<std::size_t> best;
  for (const auto& f : failures) {
    if (!best || f.line < *best) best = f.line;
  }
  return best;
}

namespace {

struct LineFailure {
  FailureKind kind;
  std::string reason;
};

LineFailure invalid(std::string reason) { return {FailureKind::Invalid, std::move(reason)}; }
LineFailure malformed(std::string reason) { return {FailureKind::Malformed, std::move(reason)}; }

std::string var_name(std::uint32_t i) { return "x" + std::to_string(i); }

// Structural validation shared by every system.
std::optional<LineFailure> validate_shape(const Proof& proof, std::size_t index, const ProofLine& line) {
  const Justification& j = line.justification;
  if (!allowed_in(j, proof.system)) {
    return malformed("justification '" + to_string(j) + "' is not available in " +
                     std::string(to_string(proof.system)));
  }
  for (std::size_t p : premises(j)) {
    if (p == 0 || p >= index) return malformed("premise " + std::to_string(p) + " is not an earlier line");
  }
  auto var_ok = [&](std::uint32_t i) { return i >= 1 && i <= proof.nvars; };
  std::optional<LineFailure> bad;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, just::Input>) {
          if (v.input == 0 || v.input > proof.inputs.size()) {
            bad = malformed("no input " + std::to_string(v.input));
          }
        } else if constexpr (std::is_same_v<T, just::Bool> || std::is_same_v<T, just::BarBool> ||
                             std::is_same_v<T, just::Compl>) {
          if (!var_ok(v.var)) bad = malformed("no variable " + var_name(v.var));
        } else if constexpr (std::is_same_v<T, just::Comm>) {
          if (!var_ok(v.i) || !var_ok(v.j)) bad = malformed("commutator axiom names a missing variable");
          else if (v.i == v.j) bad = malformed("commutator axiom needs two distinct variables");
        } else if constexpr (std::is_same_v<T, just::Mul> || std::is_same_v<T, just::MulL> ||
                             std::is_same_v<T, just::MulR>) {
          if (!var_ok(v.r.index)) bad = malformed("no variable " + to_string(v.r));
          else if (v.r.barred && proof.system != ProofSystem::PCR) {
            bad = malformed("barred variables exist only in PCR");
          }
        }
      },
      j);
  if (bad) return bad;
  for (VarId v : variables(line.formula)) {
    if (v.index > proof.nvars) return malformed("variable " + to_string(v) + " exceeds vars: " + std::to_string(proof.nvars));
    if (v.barred && proof.system != ProofSystem::PCR) return malformed("barred variables exist only in PCR");
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const Proof& proof, const CheckOptions& options)
      : proof_(proof), options_(options), expander_(proof.field, options.pit.cap) {}

  CheckReport run() {
    CheckReport report;
    if (proof_.lines.empty()) {
      report.failures.push_back({0, FailureKind::Malformed, "proof has no lines"});
      return report;
    }
    for (std::size_t i = 0; i < proof_.inputs.size(); ++i) {
      for (VarId v : variables(proof_.inputs[i])) {
        if (v.index > proof_.nvars || (v.barred && proof_.system != ProofSystem::PCR)) {
          report.failures.push_back({0, FailureKind::Malformed, "input " + std::to_string(i + 1) + " uses " + to_string(v)});
        }
      }
    }
    if (proof_.system == ProofSystem::OFPC) check_ordered_inputs(report);

    for (std::size_t i = 1; i <= proof_.lines.size(); ++i) {
      const ProofLine& line = proof_.lines[i - 1];
      std::optional<LineFailure> failure = validate_shape(proof_, i, line);
      if (!failure) {
        try {
          failure = check_line(i, line);
        } catch (const CapExceeded& e) {
          failure = LineFailure{FailureKind::CapExceeded, e.what()};
        } catch (const InvalidArgument& e) {
          failure = invalid(e.what());
        }
      }
      if (failure) report.failures.push_back({i, failure->kind, std::move(failure->reason)});
    }

    try {
      report.refutes = last_line_is_one();
    } catch (const CapExceeded& e) {
      report.failures.push_back({proof_.lines.size(), FailureKind::CapExceeded, e.what()});
    }
    if (options_.refutation && !report.refutes) {
      report.failures.push_back({proof_.lines.size(), FailureKind::Invalid, "final line does not compute 1"});
    }
    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const CheckFailure& a, const CheckFailure& b) { return a.line < b.line; });
    fill_measures(report);
    report.accepted = report.failures.empty();
    return report;
  }

 private:
  bool commutative() const { return proof_.system == ProofSystem::PC || proof_.system == ProofSystem::PCR; }

  const Formula& line_formula(std::size_t j) const { return proof_.lines[j - 1].formula; }

  // Commutative image, for PC and PCR.
  const CPoly& cpoly(const Formula& f) {
    auto it = cpolys_.find(f.id());
    if (it != cpolys_.end()) return it->second;
    return cpolys_.emplace(f.id(), erase_order(expander_(f))).first->second;
  }

  CPoly cvar(VarId v) const { return CPoly::variable(proof_.field, v); }
  CPoly cconst(int c) const { return CPoly::constant(proof_.field, Scalar(c)); }

  bool same(const Formula& a, const Formula& b) {
    if (options_.pit.backend == pit::Backend::Expand) return expander_(a) == expander_(b);
    return pit::equal(a, b, proof_.field, options_.pit);
  }

  void check_ordered_inputs(CheckReport& report) {
    for (std::size_t i = 0; i < proof_.inputs.size(); ++i) {
      try {
        auto verdict = ordered::recognize(proof_.inputs[i], proof_.order, proof_.field, options_.pit);
        if (!verdict.is_ordered()) {
          report.failures.push_back({0, FailureKind::NotOrdered,
                                     "input " + std::to_string(i + 1) + " is not ordered: " + verdict.witness->describe()});
        }
      } catch (const CapExceeded& e) {
        report.failures.push_back({0, FailureKind::CapExceeded, e.what()});
      }
    }
  }

  std::optional<LineFailure> check_line(std::size_t index, const ProofLine& line) {
    switch (proof_.system) {
      case ProofSystem::PC:
      case ProofSystem::PCR:
        return check_commutative(line);
      case ProofSystem::FPC:
        return check_syntactic(line);
      case ProofSystem::NFPC:
        return check_noncommutative(line);
      case ProofSystem::OFPC:
        return check_ordered(index, line);
    }
    return std::nullopt;
  }

  std::optional<LineFailure> check_commutative(const ProofLine& line) {
    const CPoly& p = cpoly(line.formula);
    const Field& field = proof_.field;
    auto expect = [&](const CPoly& target, const std::string& what) -> std::optional<LineFailure> {
      if (p == target) return std::nullopt;
      return invalid("line computes " + to_infix(p) + " but " + what + " is " + to_infix(target));
    };
    return std::visit(
        [&](const auto& v) -> std::optional<LineFailure> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, just::Input>) {
            return expect(cpoly(proof_.inputs[v.input - 1]), "input " + std::to_string(v.input));
          } else if constexpr (std::is_same_v<T, just::Bool>) {
            CPoly x = cvar(VarId::x(v.var));
            return expect(x - x * x, "the Boolean axiom");
          } else if constexpr (std::is_same_v<T, just::BarBool>) {
            return expect(cvar(VarId::x(v.var)) * cvar(VarId::bar(v.var)), "the Boolean axiom");
          } else if constexpr (std::is_same_v<T, just::Compl>) {
            return expect(cvar(VarId::x(v.var)) + cvar(VarId::bar(v.var)) - cconst(1), "the complement axiom");
          } else if constexpr (std::is_same_v<T, just::Add>) {
            CPoly target = CPoly::combine(cpoly(line_formula(v.j)), cpoly(line_formula(v.k)), v.a, v.b);
            return expect(target, "the combination");
          } else if constexpr (std::is_same_v<T, just::Mul>) {
            return expect(cvar(v.r) * cpoly(line_formula(v.j)), "the product");
          } else {
            (void)field;
            return malformed("unsupported justification");
          }
        },
        line.justification);
  }

  std::optional<LineFailure> check_noncommutative(const ProofLine& line) {
    auto expect = [&](const Formula& target, const std::string& what) -> std::optional<LineFailure> {
      if (same(line.formula, target)) return std::nullopt;
      return invalid("line does not compute the same polynomial as " + what);
    };
    return std::visit(
        [&](const auto& v) -> std::optional<LineFailure> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, just::Input>) {
            return expect(proof_.inputs[v.input - 1], "input " + std::to_string(v.input));
          } else if constexpr (std::is_same_v<T, just::Bool>) {
            return expect(bool_axiom(v.var), "the Boolean axiom");
          } else if constexpr (std::is_same_v<T, just::Comm>) {
            return expect(comm_axiom(v.i, v.j), "the commutator axiom");
          } else if constexpr (std::is_same_v<T, just::Add>) {
            return expect(linear_combination(v.a, line_formula(v.j), v.b, line_formula(v.k)), "the combination");
          } else if constexpr (std::is_same_v<T, just::MulL>) {
            return expect(Formula::times(Formula::variable(v.r), line_formula(v.j)), "the left product");
          } else if constexpr (std::is_same_v<T, just::MulR>) {
            return expect(Formula::times(line_formula(v.j), Formula::variable(v.r)), "the right product");
          } else if constexpr (std::is_same_v<T, just::Copy>) {
            return expect(line_formula(v.j), "line " + std::to_string(v.j));
          } else {
            return malformed("unsupported justification");
          }
        },
        line.justification);
  }

  std::optional<LineFailure> check_ordered(std::size_t index, const ProofLine& line) {
    auto verdict = ordered::recognize(line.formula, proof_.order, proof_.field, options_.pit);
    if (!verdict.is_ordered()) {
      return LineFailure{FailureKind::NotOrdered, "not an ordered formula: " + verdict.witness->describe()};
    }
    canonical_.emplace(index, *verdict.canonical);

    auto expect = [&](const Formula& target, const std::string& what) -> std::optional<LineFailure> {
      if (same(line.formula, target)) return std::nullopt;
      return invalid("line does not compute the same polynomial as " + what);
    };
    return std::visit(
        [&](const auto& v) -> std::optional<LineFailure> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, just::Input>) {
            return expect(proof_.inputs[v.input - 1], "input " + std::to_string(v.input));
          } else if constexpr (std::is_same_v<T, just::Bool>) {
            return expect(bool_axiom(v.var), "the Boolean axiom");
          } else if constexpr (std::is_same_v<T, just::Add>) {
            return expect(linear_combination(v.a, line_formula(v.j), v.b, line_formula(v.k)), "the combination");
          } else if constexpr (std::is_same_v<T, just::Mul>) {
            auto it = canonical_.find(v.j);
            if (it == canonical_.end()) return invalid("premise " + std::to_string(v.j) + " is not ordered");
            return expect(ordered::multiply_by_var(it->second, v.r, proof_.order),
                          "the ordered product of line " + std::to_string(v.j) + " by " + to_string(v.r));
          } else {
            return malformed("unsupported justification");
          }
        },
        line.justification);
  }

  std::optional<LineFailure> check_syntactic(const ProofLine& line) {
    const Formula& f = line.formula;
    auto expect = [&](const Formula& target, const std::string& what) -> std::optional<LineFailure> {
      if (f == target) return std::nullopt;
      return invalid("line is not syntactically " + what + " (" + to_string(target) + ")");
    };
    return std::visit(
        [&](const auto& v) -> std::optional<LineFailure> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, just::Input>) {
            return expect(proof_.inputs[v.input - 1], "input " + std::to_string(v.input));
          } else if constexpr (std::is_same_v<T, just::Bool>) {
            return expect(bool_axiom(v.var), "the Boolean axiom");
          } else if constexpr (std::is_same_v<T, just::Add>) {
            return expect(linear_combination(v.a, line_formula(v.j), v.b, line_formula(v.k)), "the combination");
          } else if constexpr (std::is_same_v<T, just::Mul>) {
            return expect(Formula::times(Formula::variable(v.r), line_formula(v.j)), "the product");
          } else if constexpr (std::is_same_v<T, just::Rewrite>) {
            const Formula& premise = line_formula(v.j);
            const Formula& from = subformula(premise, v.path);
            const Formula& to = subformula(f, v.path);
            if (!(replace_at(premise, v.path, to) == f)) {
              return invalid("line differs from line " + std::to_string(v.j) + " outside the rewritten position");
            }
            if (!rewrite_matches(v.rule, v.direction, from, to, proof_.field)) {
              return invalid("rule " + std::string(to_string(v.rule)) + " does not rewrite " + to_string(from) +
                             " into " + to_string(to));
            }
            return std::nullopt;
          } else {
            return malformed("unsupported justification");
          }
        },
        line.justification);
  }

  bool last_line_is_one() {
    const Formula& last = proof_.lines.back().formula;
    if (proof_.system == ProofSystem::FPC) return last.is_const() && proof_.field.reduce(last.value()) == 1;
    if (commutative()) return cpoly(last) == cconst(1);
    return expander_(last) == NCPoly::constant(proof_.field, Scalar(1));
  }

  void fill_measures(CheckReport& report) {
    if (!commutative()) {
      report.size = proof_.formula_size();
      return;
    }
    long degree = -1;
    std::size_t size = 0;
    try {
      for (const auto& line : proof_.lines) {
        const CPoly& p = cpoly(line.formula);
        size += p.size();
        degree = std::max(degree, p.degree());
      }
    } catch (const CapExceeded&) {
      return;
    }
    report.size = size;
    report.degree = degree;
  }

  const Proof& proof_;
  const CheckOptions& options_;
  Expander expander_;
  std::map<const void*, CPoly> cpolys_;
  std::map<std::size_t, Formula> canonical_;
};

}  // namespace

CheckReport check(const Proof& proof, const CheckOptions& options) { return Checker(proof, options).run(); }

}  // namespace ncproof
