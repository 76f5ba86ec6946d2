// SPDX-License-Identifier: Apache-2.0
#include "ncproof/translate.hpp"

#include <algorithm>

#include "ncproof/ordered.hpp"

namespace ncproof::translate {

namespace {

Formula neg(const Formula& f) { return Formula::scaled(Scalar(-1), f); }

Formula commutator_target(const Formula& f, const Formula& g) {
  return Formula::difference(Formula::times(f, g), Formula::times(g, f));
}

std::uint32_t max_index(const Proof& proof) {
  std::uint32_t n = 1;
  auto visit = [&](const Formula& f) {
    for (VarId v : variables(f)) n = std::max(n, v.index);
  };
  for (const auto& f : proof.inputs) visit(f);
  for (const auto& line : proof.lines) visit(line.formula);
  return n;
}

}  // namespace

NfpcBuilder::NfpcBuilder(Proof& proof) : proof_(proof) {
  if (proof.system != ProofSystem::NFPC) throw InvalidArgument("NfpcBuilder needs an NFPC proof");
}

std::size_t NfpcBuilder::emit(Formula formula, Justification justification) {
  proof_.lines.push_back(ProofLine{std::move(formula), std::move(justification)});
  return proof_.lines.size();
}

std::size_t NfpcBuilder::zero_line() {
  if (!zero_) {
    std::size_t b = emit(bool_axiom(1), just::Bool{1});
    zero_ = emit(Formula::constant(Scalar(0)), just::Add{b, b, Scalar(0), Scalar(0)});
  }
  return *zero_;
}

std::size_t NfpcBuilder::zero_as(const Formula& target) {
  std::size_t z = zero_line();
  return emit(target, just::Copy{z});
}

std::size_t NfpcBuilder::copy_as(std::size_t line, const Formula& target) {
  if (formula(line) == target) return line;
  return emit(target, just::Copy{line});
}

Scalar NfpcBuilder::constant_of(const Formula& f) const {
  return evaluate(f, proof_.field, [](VarId) -> Scalar { throw InvalidArgument("formula has variables"); });
}

std::size_t NfpcBuilder::mult_left(const Formula& b, std::size_t line) {
  Formula product = Formula::times(b, formula(line));
  if (!b.has_variables()) return emit(product, just::Add{line, line, constant_of(b), Scalar(0)});
  switch (b.kind()) {
    case Formula::Kind::Var:
      return emit(product, just::MulL{line, b.var()});
    case Formula::Kind::Plus: {
      std::size_t l1 = mult_left(b.left(), line);
      std::size_t l2 = mult_left(b.right(), line);
      return emit(product, just::Add{l1, l2, Scalar(1), Scalar(1)});
    }
    default:
      return mult_left(b.left(), mult_left(b.right(), line));
  }
}

std::size_t NfpcBuilder::mult_right(std::size_t line, const Formula& c) {
  Formula product = Formula::times(formula(line), c);
  if (!c.has_variables()) return emit(product, just::Add{line, line, constant_of(c), Scalar(0)});
  switch (c.kind()) {
    case Formula::Kind::Var:
      return emit(product, just::MulR{line, c.var()});
    case Formula::Kind::Plus: {
      std::size_t l1 = mult_right(line, c.left());
      std::size_t l2 = mult_right(line, c.right());
      return emit(product, just::Add{l1, l2, Scalar(1), Scalar(1)});
    }
    default:
      return mult_right(mult_right(line, c.left()), c.right());
  }
}

std::size_t NfpcBuilder::substitute_scaled(const Formula& context, std::string_view path, std::size_t given,
                                           Scalar& scale) {
  if (path.empty()) return given;
  if (context.is_leaf()) throw InvalidArgument("substitution path leaves the formula");
  bool left = path.front() == 'L';
  std::string_view rest = path.substr(1);
  const Formula& inner = left ? context.left() : context.right();
  if (context.is_plus()) return substitute_scaled(inner, rest, given, scale);
  const Formula& other = left ? context.right() : context.left();
  std::size_t line = substitute_scaled(inner, rest, given, scale);
  if (!other.has_variables()) {
    // Constant factors go into the coefficient of the final addition.
    scale = proof_.field.mul(scale, constant_of(other));
    return line;
  }
  return left ? mult_right(line, other) : mult_left(other, line);
}

std::size_t NfpcBuilder::substitute(const Formula& context, std::string_view path, std::size_t given) {
  Scalar scale(1);
  std::size_t line = substitute_scaled(context, path, given, scale);
  if (scale == 1) return line;
  return emit(Formula::scaled(scale, formula(line)), just::Add{line, line, scale, Scalar(0)});
}

std::size_t NfpcBuilder::replace_scaled(std::size_t line, std::string_view path, const Formula& h2,
                                        const Scaled& given) {
  if (given.scale == 0) return line;
  Formula phi = formula(line);
  Scalar scale = proof_.field.inverse(given.scale);
  std::size_t diff = substitute_scaled(phi, path, given.line, scale);
  return emit(replace_at(phi, path, h2), just::Add{line, diff, Scalar(1), proof_.field.neg(scale)});
}

std::size_t NfpcBuilder::replace_identity(std::size_t line, std::string_view path, const Formula& h2,
                                          std::size_t given) {
  return replace_scaled(line, path, h2, Scaled{given, Scalar(1)});
}

std::size_t NfpcBuilder::commutator(const Formula& f, const Formula& g) {
  Scaled c = commutator_scaled(f, g);
  Formula target = commutator_target(f, g);
  if (c.scale == 0) return zero_as(target);
  if (c.scale == 1) return copy_as(c.line, target);
  Scalar back = proof_.field.inverse(c.scale);
  return emit(target, just::Add{c.line, c.line, back, Scalar(0)});
}

NfpcBuilder::Scaled NfpcBuilder::commutator_scaled(const Formula& f, const Formula& g) {
  std::string key = to_string(f) + "|" + to_string(g);
  if (auto it = commutators_.find(key); it != commutators_.end()) return it->second;

  Formula target = commutator_target(f, g);
  Formula fg = Formula::times(f, g);
  Scaled result{0, Scalar(1)};
  if (!f.has_variables() || !g.has_variables() || f == g) {
    result.scale = 0;
  } else if (f.is_var() && g.is_var()) {
    result.line = emit(target, just::Comm{f.var().index, g.var().index});
  } else if (f.is_leaf()) {
    result = commutator_scaled(g, f);
    result.scale = proof_.field.neg(result.scale);
  } else if (f.is_plus()) {
    const Formula& f1 = f.left();
    const Formula& f2 = f.right();
    // fg - f1·g - f2·g, which computes 0.
    std::size_t line = zero_as(Formula::plus(Formula::plus(fg, neg(Formula::times(f1, g))), neg(Formula::times(f2, g))));
    line = replace_scaled(line, "LRR", Formula::times(g, f1), commutator_scaled(f1, g));
    line = replace_scaled(line, "RR", Formula::times(g, f2), commutator_scaled(f2, g));
    result.line = copy_as(line, target);
  } else {
    const Formula& f1 = f.left();
    const Formula& f2 = f.right();
    // fg - f1·(f2·g), which computes 0.
    std::size_t line = zero_as(Formula::plus(fg, neg(Formula::times(f1, Formula::times(f2, g)))));
    line = replace_scaled(line, "RRR", Formula::times(g, f2), commutator_scaled(f2, g));
    line = copy_as(line, Formula::plus(fg, neg(Formula::times(Formula::times(f1, g), f2))));
    line = replace_scaled(line, "RRL", Formula::times(g, f1), commutator_scaled(f1, g));
    result.line = copy_as(line, target);
  }
  commutators_.emplace(std::move(key), result);
  return result;
}

Proof commutator_proof(const Formula& f, const Formula& g, const Field& field) {
  if (expand(f, field).is_constant() || expand(g, field).is_constant()) {
    throw InvalidArgument("commutator proofs need non-constant operands");
  }
  Proof proof;
  proof.system = ProofSystem::NFPC;
  proof.field = field;
  proof.nvars = 1;
  for (VarId v : variables(Formula::times(f, g))) proof.nvars = std::max(proof.nvars, v.index);
  proof.order = Order::identity(proof.nvars);
  NfpcBuilder builder(proof);
  builder.commutator(f, g);
  return proof;
}

Proof substitute_in_context(const Formula& a, VarId z, const Formula& h, const Formula& h2, const Field& field) {
  std::string path = path_to_unique(a, z);
  Formula diff = Formula::difference(h, h2);
  Formula ah = replace_at(a, path, h);
  Formula target = Formula::difference(ah, replace_at(a, path, h2));

  Proof proof;
  proof.system = ProofSystem::NFPC;
  proof.field = field;
  proof.inputs.push_back(diff);
  proof.lines.push_back(ProofLine{diff, just::Input{1}});
  proof.nvars = 1;
  for (VarId v : variables(Formula::times(ah, Formula::times(h2, target)))) proof.nvars = std::max(proof.nvars, v.index);
  proof.order = Order::identity(proof.nvars);
  NfpcBuilder builder(proof);
  std::size_t last = builder.substitute(ah, path, 1);
  if (!(builder.formula(last) == target) || last != builder.size()) builder.emit(target, just::Copy{last});
  return proof;
}

namespace {

Formula one_minus(VarId x) {
  return Formula::plus(Formula::constant(Scalar(1)), Formula::scaled(Scalar(-1), Formula::variable(x)));
}

// Writes a PCR polynomial after x̄_i ↦ 1 - x_i as an ordered formula: one
// ordered product of x_i and (1 - x_i) factors per monomial.
Formula render_tau(const CPoly& p, const Order& order) {
  std::optional<Formula> sum;
  for (const auto& [monomial, c] : p.terms()) {
    Letters letters = monomial;
    std::stable_sort(letters.begin(), letters.end(),
                     [&](VarId a, VarId b) { return order.position(a) < order.position(b); });
    std::vector<Formula> factors;
    for (VarId v : letters) {
      factors.push_back(v.barred ? one_minus(VarId::x(v.index)) : Formula::variable(v));
    }
    Formula term = letters.empty() ? Formula::constant(c) : ordered::product_of(factors);
    if (!letters.empty() && c != 1) term = Formula::scaled(c, term);
    sum = sum ? Formula::plus(*sum, term) : term;
  }
  return sum ? *sum : Formula::constant(Scalar(0));
}

}  // namespace

Report pcr_to_ofpc(const Proof& pcr, const CheckOptions& options) {
  if (pcr.system != ProofSystem::PCR) throw InvalidArgument("expected a PCR proof");
  CheckOptions plain = options;
  plain.refutation = false;
  CheckReport verdict = check(pcr, plain);
  if (!verdict.accepted) throw InvalidArgument("input is not an accepted PCR proof");

  const Field& field = pcr.field;
  Expander expander(field, options.pit.cap);
  auto cpoly = [&](const Formula& f) { return erase_order(expander(f)); };

  Report report;
  Proof& out = report.output;
  out.system = ProofSystem::OFPC;
  out.field = field;
  out.nvars = pcr.nvars;
  out.order = pcr.order;
  for (const auto& input : pcr.inputs) out.inputs.push_back(render_tau(cpoly(input), pcr.order));

  std::vector<std::optional<std::size_t>> map(pcr.lines.size() + 1);
  std::vector<CPoly> polys;
  polys.reserve(pcr.lines.size());
  for (std::size_t i = 1; i <= pcr.lines.size(); ++i) {
    const ProofLine& line = pcr.lines[i - 1];
    CPoly p = cpoly(line.formula);
    polys.push_back(p);
    std::size_t before_lines = out.lines.size();
    std::size_t before_size = out.formula_size();

    if (!tau_substitute(p).is_zero()) {
      Formula rendered = render_tau(p, pcr.order);
      auto emit = [&](Formula f, Justification j) {
        out.lines.push_back(ProofLine{std::move(f), std::move(j)});
        return out.lines.size();
      };
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, just::Input>) {
              map[i] = emit(rendered, v);
            } else if constexpr (std::is_same_v<T, just::Bool>) {
              map[i] = emit(rendered, v);
            } else if constexpr (std::is_same_v<T, just::BarBool>) {
              map[i] = emit(rendered, just::Bool{v.var});
            } else if constexpr (std::is_same_v<T, just::Add>) {
              if (map[v.j] && map[v.k]) {
                map[i] = emit(rendered, just::Add{*map[v.j], *map[v.k], v.a, v.b});
              } else if (map[v.j]) {
                map[i] = emit(rendered, just::Add{*map[v.j], *map[v.j], v.a, Scalar(0)});
              } else {
                map[i] = emit(rendered, just::Add{*map[v.k], *map[v.k], v.b, Scalar(0)});
              }
            } else if constexpr (std::is_same_v<T, just::Mul>) {
              std::size_t j = *map[v.j];
              if (!v.r.barred) {
                map[i] = emit(rendered, just::Mul{j, v.r});
              } else {
                VarId x = VarId::x(v.r.index);
                CPoly xp = CPoly::variable(field, x) * polys[v.j - 1];
                std::size_t with_x = emit(render_tau(xp, pcr.order), just::Mul{j, x});
                map[i] = emit(rendered, just::Add{j, with_x, Scalar(1), Scalar(-1)});
              }
            } else {
              throw InvalidArgument("unexpected justification " + to_string(Justification(v)));
            }
          },
          line.justification);
    }
    report.lines_per_line.push_back(out.lines.size() - before_lines);
    report.size_per_line.push_back(out.formula_size() - before_size);
  }

  report.size_in = verdict.size;
  report.size_out = out.formula_size();
  report.size_bound = kPcrSizeConstant * std::max<std::uint32_t>(pcr.nvars, 1) * report.size_in;
  return report;
}

Report fpc_to_nfpc(const Proof& fpc, const CheckOptions& options) {
  if (fpc.system != ProofSystem::FPC) throw InvalidArgument("expected an F-PC proof");
  CheckOptions plain = options;
  plain.refutation = false;
  if (!check(fpc, plain).accepted) throw InvalidArgument("input is not an accepted F-PC proof");

  Report report;
  Proof& out = report.output;
  out.system = ProofSystem::NFPC;
  out.field = fpc.field;
  out.nvars = std::max(fpc.nvars, max_index(fpc));
  out.order = fpc.order;
  out.inputs = fpc.inputs;
  NfpcBuilder builder(out);

  std::vector<std::size_t> map(fpc.lines.size() + 1, 0);
  for (std::size_t i = 1; i <= fpc.lines.size(); ++i) {
    const ProofLine& line = fpc.lines[i - 1];
    std::size_t before_lines = out.lines.size();
    std::size_t before_size = out.formula_size();
    map[i] = std::visit(
        [&](const auto& v) -> std::size_t {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, just::Input> || std::is_same_v<T, just::Bool>) {
            return builder.emit(line.formula, v);
          } else if constexpr (std::is_same_v<T, just::Add>) {
            return builder.emit(line.formula, just::Add{map[v.j], map[v.k], v.a, v.b});
          } else if constexpr (std::is_same_v<T, just::Mul>) {
            return builder.emit(line.formula, just::MulL{map[v.j], v.r});
          } else if constexpr (std::is_same_v<T, just::Rewrite>) {
            const Formula& premise = fpc.lines[v.j - 1].formula;
            const Formula& site = subformula(premise, v.path);
            if (v.rule != RewriteRule::CommTimes || !site.left().has_variables() ||
                !site.right().has_variables()) {
              return builder.emit(line.formula, just::Copy{map[v.j]});
            }
            std::size_t comm = builder.commutator(site.left(), site.right());
            std::size_t diff = builder.substitute(premise, v.path, comm);
            return builder.emit(line.formula, just::Add{map[v.j], diff, Scalar(1), Scalar(-1)});
          } else {
            throw InvalidArgument("unexpected justification " + to_string(Justification(v)));
          }
        },
        line.justification);
    report.lines_per_line.push_back(out.lines.size() - before_lines);
    report.size_per_line.push_back(out.formula_size() - before_size);
  }

  report.size_in = fpc.formula_size();
  report.size_out = out.formula_size();
  return report;
}

}  // namespace ncproof::translate
