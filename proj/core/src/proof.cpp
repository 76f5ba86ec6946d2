// SPDX-License-Identifier: Apache-2.0
#include "ncproof/proof.hpp"

#include <charconv>
#include <sstream>

namespace ncproof {

std::string_view to_string(ProofSystem system) {
  switch (system) {
    case ProofSystem::PC:
      return "PC";
    case ProofSystem::PCR:
      return "PCR";
    case ProofSystem::FPC:
      return "FPC";
    case ProofSystem::NFPC:
      return "NFPC";
    case ProofSystem::OFPC:
      return "OFPC";
  }
  return "?";
}

ProofSystem parse_system(std::string_view name) {
  for (ProofSystem s : {ProofSystem::PC, ProofSystem::PCR, ProofSystem::FPC, ProofSystem::NFPC, ProofSystem::OFPC}) {
    if (to_string(s) == name) return s;
  }
  if (name == "F-PC") return ProofSystem::FPC;
  throw InvalidArgument("unknown proof system '" + std::string(name) + "'");
}

std::string_view to_string(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::Zero:
      return "zero";
    case RewriteRule::Unit:
      return "unit";
    case RewriteRule::Scalar:
      return "scalar";
    case RewriteRule::CommPlus:
      return "comm+";
    case RewriteRule::CommTimes:
      return "comm*";
    case RewriteRule::AssocPlus:
      return "assoc+";
    case RewriteRule::AssocTimes:
      return "assoc*";
    case RewriteRule::Dist:
      return "dist";
  }
  return "?";
}

RewriteRule parse_rule(std::string_view name) {
  for (RewriteRule r : kAllRewriteRules) {
    if (to_string(r) == name) return r;
  }
  if (name == "comm×" || name == "commx") return RewriteRule::CommTimes;
  if (name == "assoc×" || name == "assocx") return RewriteRule::AssocTimes;
  throw InvalidArgument("unknown rewrite rule '" + std::string(name) + "'");
}

std::vector<std::size_t> premises(const Justification& j) {
  return std::visit(
      [](const auto& v) -> std::vector<std::size_t> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, just::Add>) {
          return {v.j, v.k};
        } else if constexpr (std::is_same_v<T, just::Mul> || std::is_same_v<T, just::MulL> ||
                             std::is_same_v<T, just::MulR> || std::is_same_v<T, just::Rewrite> ||
                             std::is_same_v<T, just::Copy>) {
          return {v.j};
        } else {
          return {};
        }
      },
      j);
}

namespace {

std::string var_token(VarId r) { return r.barred ? "X" + std::to_string(r.index) : std::to_string(r.index); }

}  // namespace

std::string to_string(const Justification& j) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, just::Input>) {
          return "input " + std::to_string(v.input);
        } else if constexpr (std::is_same_v<T, just::Bool>) {
          return "bool " + std::to_string(v.var);
        } else if constexpr (std::is_same_v<T, just::Comm>) {
          return "comm " + std::to_string(v.i) + " " + std::to_string(v.j);
        } else if constexpr (std::is_same_v<T, just::BarBool>) {
          return "barbool " + std::to_string(v.var);
        } else if constexpr (std::is_same_v<T, just::Compl>) {
          return "compl " + std::to_string(v.var);
        } else if constexpr (std::is_same_v<T, just::Add>) {
          return "add " + std::to_string(v.j) + " " + std::to_string(v.k) + " " + scalar_to_string(v.a) + " " +
                 scalar_to_string(v.b);
        } else if constexpr (std::is_same_v<T, just::Mul>) {
          return "mul " + std::to_string(v.j) + " " + var_token(v.r);
        } else if constexpr (std::is_same_v<T, just::MulL>) {
          return "mulL " + std::to_string(v.j) + " " + var_token(v.r);
        } else if constexpr (std::is_same_v<T, just::MulR>) {
          return "mulR " + std::to_string(v.j) + " " + var_token(v.r);
        } else if constexpr (std::is_same_v<T, just::Rewrite>) {
          return "rw " + std::to_string(v.j) + " " + std::string(to_string(v.rule)) + " " +
                 (v.path.empty() ? std::string(".") : v.path) + " " +
                 (v.direction == Direction::Forward ? "fwd" : "bwd");
        } else {
          return "copy " + std::to_string(v.j);
        }
      },
      j);
}

namespace {

std::uint64_t parse_count(std::string_view tok, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
    throw InvalidArgument("expected a positive " + std::string(what) + ", got '" + std::string(tok) + "'");
  }
  return value;
}

std::uint32_t parse_index(std::string_view tok) {
  std::uint64_t v = parse_count(tok, "variable index");
  if (v > 0xffffffffULL) throw InvalidArgument("variable index too large");
  return static_cast<std::uint32_t>(v);
}

VarId parse_var_token(std::string_view tok) {
  if (!tok.empty() && (tok[0] == 'x' || tok[0] == 'X')) {
    return VarId{parse_index(tok.substr(1)), tok[0] == 'X'};
  }
  return VarId::x(parse_index(tok));
}

std::string parse_path(std::string_view tok) {
  if (tok == "." || tok == "root" || tok == "-") return "";
  for (char c : tok) {
    if (c != 'L' && c != 'R') throw InvalidArgument("path must be over {L, R}, got '" + std::string(tok) + "'");
  }
  return std::string(tok);
}

}  // namespace

Justification parse_justification(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) throw InvalidArgument("missing justification");
  const std::string& kind = tok[0];
  auto expect = [&](std::size_t n) {
    if (tok.size() != n + 1) {
      throw InvalidArgument("'" + kind + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
  };
  auto line_ref = [&](std::size_t i) { return static_cast<std::size_t>(parse_count(tok[i], "line number")); };
  if (kind == "input") {
    expect(1);
    return just::Input{line_ref(1)};
  }
  if (kind == "bool") {
    expect(1);
    return just::Bool{parse_index(tok[1])};
  }
  if (kind == "comm") {
    expect(2);
    return just::Comm{parse_index(tok[1]), parse_index(tok[2])};
  }
  if (kind == "barbool") {
    expect(1);
    return just::BarBool{parse_index(tok[1])};
  }
  if (kind == "compl") {
    expect(1);
    return just::Compl{parse_index(tok[1])};
  }
  if (kind == "add") {
    expect(4);
    Field q = Field::rationals();
    return just::Add{line_ref(1), line_ref(2), q.parse_scalar(tok[3]), q.parse_scalar(tok[4])};
  }
  if (kind == "mul") {
    expect(2);
    return just::Mul{line_ref(1), parse_var_token(tok[2])};
  }
  if (kind == "mulL") {
    expect(2);
    return just::MulL{line_ref(1), parse_var_token(tok[2])};
  }
  if (kind == "mulR") {
    expect(2);
    return just::MulR{line_ref(1), parse_var_token(tok[2])};
  }
  if (kind == "rw") {
    expect(4);
    Direction dir;
    if (tok[4] == "fwd") {
      dir = Direction::Forward;
    } else if (tok[4] == "bwd") {
      dir = Direction::Backward;
    } else {
      throw InvalidArgument("direction must be fwd or bwd, got '" + tok[4] + "'");
    }
    return just::Rewrite{line_ref(1), parse_rule(tok[2]), parse_path(tok[3]), dir};
  }
  if (kind == "copy") {
    expect(1);
    return just::Copy{line_ref(1)};
  }
  throw InvalidArgument("unknown justification '" + kind + "'");
}

bool allowed_in(const Justification& j, ProofSystem system) {
  return std::visit(
      [system](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, just::Input> || std::is_same_v<T, just::Bool> ||
                      std::is_same_v<T, just::Add>) {
          return true;
        } else if constexpr (std::is_same_v<T, just::Comm> || std::is_same_v<T, just::MulL> ||
                             std::is_same_v<T, just::MulR> || std::is_same_v<T, just::Copy>) {
          return system == ProofSystem::NFPC;
        } else if constexpr (std::is_same_v<T, just::BarBool> || std::is_same_v<T, just::Compl>) {
          return system == ProofSystem::PCR;
        } else if constexpr (std::is_same_v<T, just::Mul>) {
          return system != ProofSystem::NFPC;
        } else {
          return system == ProofSystem::FPC;
        }
      },
      j);
}

std::size_t Proof::formula_size() const {
  std::size_t total = 0;
  for (const auto& line : lines) total += line.formula.size();
  return total;
}

Formula bool_axiom(std::uint32_t i) {
  Formula x = Formula::variable(VarId::x(i));
  return Formula::times(x, Formula::plus(Formula::constant(Scalar(1)), Formula::scaled(Scalar(-1), x)));
}

Formula comm_axiom(std::uint32_t i, std::uint32_t j) {
  Formula xi = Formula::variable(VarId::x(i));
  Formula xj = Formula::variable(VarId::x(j));
  return Formula::difference(Formula::times(xi, xj), Formula::times(xj, xi));
}

Formula barbool_axiom(std::uint32_t i) {
  return Formula::times(Formula::variable(VarId::x(i)), Formula::variable(VarId::bar(i)));
}

Formula compl_axiom(std::uint32_t i) {
  return Formula::plus(Formula::plus(Formula::variable(VarId::x(i)), Formula::variable(VarId::bar(i))),
                       Formula::constant(Scalar(-1)));
}

Formula linear_combination(const Scalar& a, const Formula& f, const Scalar& b, const Formula& g) {
  return Formula::plus(Formula::scaled(a, f), Formula::scaled(b, g));
}

namespace {

bool is_constant_value(const Formula& f, int value, const Field& field) {
  return f.is_const() && field.reduce(f.value()) == value;
}

Scalar constant_value(const Formula& f, const Field& field) {
  return evaluate(f, field, [](VarId) -> Scalar { throw InvalidArgument("formula has variables"); });
}

bool forward_matches(RewriteRule rule, const Formula& lhs, const Formula& rhs, const Field& field) {
  switch (rule) {
    case RewriteRule::Zero:
      return lhs.is_times() && is_constant_value(lhs.left(), 0, field) && is_constant_value(rhs, 0, field);
    case RewriteRule::Unit:
      return lhs.is_times() && is_constant_value(lhs.left(), 1, field) && rhs == lhs.right();
    case RewriteRule::Scalar:
      return !lhs.has_variables() && rhs.is_const() && field.reduce(rhs.value()) == constant_value(lhs, field);
    case RewriteRule::CommPlus:
    case RewriteRule::CommTimes: {
      auto kind = rule == RewriteRule::CommPlus ? Formula::Kind::Plus : Formula::Kind::Times;
      return lhs.kind() == kind && rhs.kind() == kind && rhs.left() == lhs.right() && rhs.right() == lhs.left();
    }
    case RewriteRule::AssocPlus:
    case RewriteRule::AssocTimes: {
      auto kind = rule == RewriteRule::AssocPlus ? Formula::Kind::Plus : Formula::Kind::Times;
      return lhs.kind() == kind && lhs.right().kind() == kind && rhs.kind() == kind && rhs.left().kind() == kind &&
             rhs.left().left() == lhs.left() && rhs.left().right() == lhs.right().left() &&
             rhs.right() == lhs.right().right();
    }
    case RewriteRule::Dist:
      return lhs.is_times() && lhs.right().is_plus() && rhs.is_plus() && rhs.left().is_times() &&
             rhs.right().is_times() && rhs.left().left() == lhs.left() && rhs.right().left() == lhs.left() &&
             rhs.left().right() == lhs.right().left() && rhs.right().right() == lhs.right().right();
  }
  return false;
}

std::optional<Formula> forward_result(RewriteRule rule, const Formula& f, const Field& field) {
  switch (rule) {
    case RewriteRule::Zero:
      if (f.is_times() && is_constant_value(f.left(), 0, field)) return Formula::constant(Scalar(0));
      return std::nullopt;
    case RewriteRule::Unit:
      if (f.is_times() && is_constant_value(f.left(), 1, field)) return f.right();
      return std::nullopt;
    case RewriteRule::Scalar:
      if (f.has_variables()) return std::nullopt;
      return Formula::constant(constant_value(f, field));
    case RewriteRule::CommPlus:
      if (!f.is_plus()) return std::nullopt;
      return Formula::plus(f.right(), f.left());
    case RewriteRule::CommTimes:
      if (!f.is_times()) return std::nullopt;
      return Formula::times(f.right(), f.left());
    case RewriteRule::AssocPlus:
      if (!f.is_plus() || !f.right().is_plus()) return std::nullopt;
      return Formula::plus(Formula::plus(f.left(), f.right().left()), f.right().right());
    case RewriteRule::AssocTimes:
      if (!f.is_times() || !f.right().is_times()) return std::nullopt;
      return Formula::times(Formula::times(f.left(), f.right().left()), f.right().right());
    case RewriteRule::Dist:
      if (!f.is_times() || !f.right().is_plus()) return std::nullopt;
      return Formula::plus(Formula::times(f.left(), f.right().left()), Formula::times(f.left(), f.right().right()));
  }
  return std::nullopt;
}

std::optional<Formula> backward_result(RewriteRule rule, const Formula& f) {
  switch (rule) {
    case RewriteRule::Zero:
    case RewriteRule::Scalar:
      return std::nullopt;
    case RewriteRule::Unit:
      return Formula::times(Formula::constant(Scalar(1)), f);
    case RewriteRule::CommPlus:
      if (!f.is_plus()) return std::nullopt;
      return Formula::plus(f.right(), f.left());
    case RewriteRule::CommTimes:
      if (!f.is_times()) return std::nullopt;
      return Formula::times(f.right(), f.left());
    case RewriteRule::AssocPlus:
      if (!f.is_plus() || !f.left().is_plus()) return std::nullopt;
      return Formula::plus(f.left().left(), Formula::plus(f.left().right(), f.right()));
    case RewriteRule::AssocTimes:
      if (!f.is_times() || !f.left().is_times()) return std::nullopt;
      return Formula::times(f.left().left(), Formula::times(f.left().right(), f.right()));
    case RewriteRule::Dist:
      if (!f.is_plus() || !f.left().is_times() || !f.right().is_times() || !(f.left().left() == f.right().left())) {
        return std::nullopt;
      }
      return Formula::times(f.left().left(), Formula::plus(f.left().right(), f.right().right()));
  }
  return std::nullopt;
}

}  // namespace

bool rewrite_matches(RewriteRule rule, Direction direction, const Formula& from, const Formula& to,
                     const Field& field) {
  if (direction == Direction::Forward) return forward_matches(rule, from, to, field);
  return forward_matches(rule, to, from, field);
}

std::optional<Formula> rewrite_result(RewriteRule rule, Direction direction, const Formula& from,
                                      const Field& field) {
  if (direction == Direction::Forward) return forward_result(rule, from, field);
  return backward_result(rule, from);
}

}  // namespace ncproof
